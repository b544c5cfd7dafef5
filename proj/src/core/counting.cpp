#include "counting.hpp"

#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace weyldft {

namespace {

using BigInt = boost::multiprecision::cpp_int;

Int to_int(const BigInt& v, const char* what) {
    if (v > BigInt(std::numeric_limits<Int>::max()) || v < BigInt(std::numeric_limits<Int>::min()))
        fail(ErrorCode::Internal, std::string("count overflow in ") + what);
    return static_cast<Int>(v);
}

BigInt big_binomial(Int a, Int b) {
    if (b < 0 || a < 0 || a < b) return 0;
    BigInt r = 1;
    for (Int i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

Int exact_div(const BigInt& v, Int d, const char* what) {
    if (d == 0 || v % d != 0) fail(ErrorCode::Internal, std::string("inexact division in ") + what);
    return to_int(v / d, what);
}

}  // namespace

Int binomial(Int a, Int b) { return to_int(big_binomial(a, b), "binomial"); }

Int euler_phi(Int d) {
    Int result = d;
    for (Int p = 2; p * p <= d; ++p)
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            result -= result / p;
        }
    if (d > 1) result -= result / d;
    return result;
}

Int denumerant(const RootSystemData& R, Int M) {
    if (M < 0) return 0;
    std::vector<Int> ways(M + 1, 0);
    ways[0] = 1;
    IntVec coins(1, 1);
    for (int i = 1; i <= R.rank; ++i) coins.push_back(R.comarks[i]);
    for (Int c : coins)
        for (Int v = c; v <= M; ++v) ways[v] += ways[v - c];
    return ways[M];
}

namespace {

Int count_A(const RootSystemData& R, SignHom sigma, Int M);
Int count_B(const RootSystemData& R, SignHom sigma, Int M);
Int count_C(const RootSystemData& R, SignHom sigma, Int M);
Int count_D(const RootSystemData& R, SignHom sigma, Int M);
Int count_E6(const RootSystemData& R, SignHom sigma, Int M);
Int count_E7(const RootSystemData& R, SignHom sigma, Int M);

Int count_A(const RootSystemData& R, SignHom sigma, Int M) {
    const Int n = R.rank;
    if (M < 0) return 0;
    if (sigma == SignHom::Identity) {
        if (M == 0) return 1;
        BigInt acc = 0;
        Int g = std::gcd(n + 1, M);
        for (Int d = 1; d <= g; ++d) {
            if (g % d != 0) continue;
            acc += BigInt(euler_phi(d)) * big_binomial((n + M + 1) / d, (n + 1) / d);
        }
        return exact_div(acc, n + M + 1, "type A count");
    }
    // Determinant sign.
    if (M < 1) return 0;
    BigInt acc = 0;
    Int g = std::gcd(n + 1, M);
    for (Int d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        Int s = ((n + 1) / d) % 2 == 0 ? 1 : -1;
        acc += BigInt(s * euler_phi(d)) * big_binomial(M / d, (n + 1) / d);
    }
    if ((n + 1) % 2 != 0) acc = -acc;
    return exact_div(acc, M, "type A det count");
}

Int lamB1(Int n, Int M) {
    if (M < 0) return 0;
    if (M % 2 == 1) return binomial(n + (M - 1) / 2, n);
    Int l = (M / 2) % 2, k = (M - 2 * l) / 4;
    BigInt acc;
    if (n % 2 == 1) {
        Int m = (n - 1) / 2;
        acc = big_binomial(2 * m + 2 * k + l + 1, 2 * m + 1) +
              big_binomial(2 * m + 2 * k + l, 2 * m + 1) + big_binomial(m + k, m);
    } else {
        Int m = n / 2;
        acc = big_binomial(2 * m + 2 * k + l, 2 * m) + big_binomial(2 * m + 2 * k + l - 1, 2 * m) +
              big_binomial(m + k, m) + big_binomial(m + k + l - 1, m);
    }
    return exact_div(acc, 2, "type B count");
}

Int count_B(const RootSystemData& R, SignHom sigma, Int M) {
    const Int n = R.rank;
    if (M < 0) return 0;
    if (sigma == SignHom::Identity) return lamB1(n, M);
    Int l = (((M % 4) + 4) % 4) / 2, k = (M - 2 * l) / 4;
    if (sigma == SignHom::Det) {
        if (M % 2 == 0 && n % 4 == 1) {
            Int m = (n - 1) / 4;
            BigInt acc = big_binomial(2 * k + l, n) + big_binomial(2 * k + l - 1, n) -
                         big_binomial(k + l - 1, 2 * m);
            return exact_div(acc, 2, "type B det count");
        }
        if (M % 2 == 0 && n % 4 == 2) {
            Int m = (n - 2) / 4;
            BigInt acc = big_binomial(2 * k + l, n) + big_binomial(2 * k + l - 1, n) -
                         big_binomial(k, 2 * m + 1) - big_binomial(k + l - 1, 2 * m + 1);
            return exact_div(acc, 2, "type B det count");
        }
        return lamB1(n, M - 2 * n);
    }
    if (sigma == SignHom::Short) {
        if (M % 2 == 0 && n % 2 == 1) {
            Int m = (n - 1) / 2;
            BigInt acc = big_binomial(2 * m + 2 * k + l, 2 * m + 1) +
                         big_binomial(2 * m + 2 * k + l - 1, 2 * m + 1) -
                         big_binomial(m + k + l - 1, m);
            return exact_div(acc, 2, "type B short count");
        }
        return lamB1(n, M - 2);
    }
    // Long sign.
    if (M % 2 == 0 && n % 4 == 2) {
        Int m = (n - 2) / 4;
        BigInt acc = big_binomial(2 * k + l + 1, n) + big_binomial(2 * k + l, n) -
                     big_binomial(k, 2 * m + 1) - big_binomial(k + l, 2 * m + 1);
        return exact_div(acc, 2, "type B long count");
    }
    if (M % 2 == 0 && n % 4 == 3) {
        Int m = (n - 3) / 4;
        BigInt acc = big_binomial(2 * k + l + 1, n) + big_binomial(2 * k + l, n) -
                     big_binomial(k, 2 * m + 1);
        return exact_div(acc, 2, "type B long count");
    }
    return lamB1(n, M - 2 * n + 2);
}

Int lamC1(Int n, Int M) {
    if (M < 0) return 0;
    return binomial(n + M / 2, n);
}

Int count_C(const RootSystemData& R, SignHom sigma, Int M) {
    const Int n = R.rank;
    switch (sigma) {
        case SignHom::Identity: return lamC1(n, M);
        case SignHom::Det: return lamC1(n, M - 2 * n - 1);
        case SignHom::Short: return lamC1(n, M - 2 * n + 2);
        case SignHom::Long: return lamC1(n, M - 3);
    }
    return 0;
}

Int lamD1(Int n, Int M) {
    if (M < 0) return 0;
    if (M % 2 == 1) {
        Int k = (M - 1) / 2;
        return binomial(n + k, n) + binomial(n + k - 1, n);
    }
    BigInt acc;
    if (n % 2 == 1) {
        Int m = (n - 1) / 2;
        if (M % 4 == 0) {
            Int k = M / 4;
            acc = big_binomial(2 * m + 2 * k + 1, 2 * m + 1) +
                  6 * big_binomial(2 * m + 2 * k, 2 * m + 1) +
                  big_binomial(2 * m - 1 + 2 * k, 2 * m + 1) +
                  big_binomial(2 * m - 1 + 2 * k, 2 * m - 1) + 2 * big_binomial(m + k - 1, m - 1);
        } else {
            Int k = (M - 2) / 4;
            acc = big_binomial(2 * m + 2 * k + 2, 2 * m + 1) +
                  6 * big_binomial(2 * m + 2 * k + 1, 2 * m + 1) +
                  big_binomial(2 * m + 2 * k, 2 * m + 1) + big_binomial(2 * m + 2 * k, 2 * m - 1);
        }
    } else {
        Int m = n / 2;
        if (M % 4 == 0) {
            Int k = M / 4;
            acc = big_binomial(2 * m + 2 * k, 2 * m) + 6 * big_binomial(2 * m + 2 * k - 1, 2 * m) +
                  big_binomial(2 * m + 2 * k - 2, 2 * m) +
                  big_binomial(2 * m + 2 * k - 2, 2 * m - 2) + 2 * big_binomial(m + k, m) +
                  6 * big_binomial(m + k - 1, m);
        } else {
            Int k = (M - 2) / 4;
            acc = big_binomial(2 * m + 2 * k + 1, 2 * m) + 6 * big_binomial(2 * m + 2 * k, 2 * m) +
                  big_binomial(2 * m + 2 * k - 1, 2 * m) +
                  big_binomial(2 * m + 2 * k - 1, 2 * m - 2) + 6 * big_binomial(m + k, m) +
                  2 * big_binomial(m + k - 1, m);
        }
    }
    return exact_div(acc, 4, "type D count");
}

Int count_D(const RootSystemData& R, SignHom sigma, Int M) {
    const Int n = R.rank;
    if (M < 0) return 0;
    if (sigma == SignHom::Identity) return lamD1(n, M);
    // Determinant sign.
    if (M % 2 == 0) {
        Int k = (M % 4 == 0) ? M / 4 : (M - 2) / 4;
        if (M % 4 == 0 && n % 4 == 3) {
            Int m = (n - 3) / 4;
            BigInt acc = big_binomial(2 * k + 1, n) + 6 * big_binomial(2 * k, n) +
                         big_binomial(2 * k - 1, n) + big_binomial(2 * k - 1, n - 2) -
                         2 * big_binomial(k - 1, 2 * m);
            return exact_div(acc, 4, "type D det count");
        }
        if (M % 4 == 2 && n % 4 == 2) {
            Int m = (n - 2) / 4;
            BigInt acc = big_binomial(2 * k + 2, n) + 6 * big_binomial(2 * k + 1, n) +
                         big_binomial(2 * k, n) + big_binomial(2 * k, n - 2) -
                         2 * big_binomial(k + 1, 2 * m + 1) - 6 * big_binomial(k, 2 * m + 1);
            return exact_div(acc, 4, "type D det count");
        }
        if (M % 4 == 0 && n % 4 == 2) {
            Int m = (n - 2) / 4;
            BigInt acc = big_binomial(2 * k + 1, n) + 6 * big_binomial(2 * k, n) +
                         big_binomial(2 * k - 1, n) + big_binomial(2 * k - 1, n - 2) -
                         6 * big_binomial(k, 2 * m + 1) - 2 * big_binomial(k - 1, 2 * m + 1);
            return exact_div(acc, 4, "type D det count");
        }
    }
    return lamD1(n, M - 2 * n + 2);
}

Int count_E6(const RootSystemData& R, SignHom sigma, Int M) {
    if (sigma == SignHom::Det) return count_E6(R, SignHom::Identity, M - 12);
    if (M < 0) return 0;
    BigInt acc = denumerant(R, M);
    if (M % 6 == 0) {
        Int k = M / 6;
        acc += 2 * big_binomial(k + 2, 2) + 2 * big_binomial(k + 1, 2);
    } else if (M % 6 == 3) {
        Int k = (M - 3) / 6;
        acc += 4 * big_binomial(k + 2, 2);
    }
    return exact_div(acc, 3, "type E6 count");
}

constexpr Int kE7Table[6][4] = {{1, 34, 64, 9},  {2, 46, 55, 5},  {5, 55, 46, 2},
                                {9, 64, 34, 1},  {16, 67, 25, 0}, {25, 67, 16, 0}};

Int count_E7(const RootSystemData& R, SignHom sigma, Int M) {
    if (M < 0) return 0;
    if (sigma == SignHom::Identity) {
        BigInt acc = denumerant(R, M);
        if (M % 2 == 0) {
            Int l = (M % 12) / 2, k = M / 12;
            for (int i = 0; i < 4; ++i) acc += kE7Table[l][i] * big_binomial(4 - i + k, 4);
        }
        return exact_div(acc, 2, "type E7 count");
    }
    // Determinant sign.
    if (M % 2 == 1) return count_E7(R, SignHom::Identity, M - 18);
    Int l = (M % 12) / 2, k = M / 12;
    BigInt acc = denumerant(R, M - 18);
    if (l <= 2)
        for (int i = 0; i < 4; ++i) acc -= kE7Table[l + 3][i] * big_binomial(2 - i + k, 4);
    else
        for (int i = 0; i < 4; ++i) acc -= kE7Table[l - 3][i] * big_binomial(3 - i + k, 4);
    return exact_div(acc, 2, "type E7 det count");
}

}  // namespace

Int closed_count(const RootSystemData& R, SignHom sigma, Int M) {
    require_admissible(R, sigma);
    switch (R.type.family) {
        case Family::A: return count_A(R, sigma, M);
        case Family::B: return count_B(R, sigma, M);
        case Family::C: return count_C(R, sigma, M);
        case Family::D: return count_D(R, sigma, M);
        case Family::E:
            if (R.rank == 6) return count_E6(R, sigma, M);
            if (R.rank == 7) return count_E7(R, sigma, M);
            [[fallthrough]];
        case Family::F:
        case Family::G:
            return denumerant(R, M - generalized_coxeter(R, sigma));
    }
    return 0;
}

Int burnside_count(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M) {
    require_admissible(R, sigma);
    Int shifted = M - generalized_coxeter(R, sigma);
    if (shifted < 0) return 0;
    IntVec lo(R.rank + 1, 0);
    Int fix_plus = 0;
    for (const IntVec& lam : enumerate_labels(R.comarks, lo, shifted)) {
        if (G.stab_has_negative_sign(lam, sigma)) continue;
        fix_plus += G.stab_order(lam);
    }
    if (fix_plus % G.size() != 0) fail(ErrorCode::Internal, "orbit count is not an integer");
    return fix_plus / G.size();
}

Int enumerated_weight_count(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M) {
    return static_cast<Int>(weight_set_P(R, G, sigma, M, /*relaxed=*/true).weights.size());
}

Int enumerated_point_count(const RootSystemData& R, SignHom sigma, Int M) {
    return static_cast<Int>(point_set(R, sigma, M, /*relaxed=*/true).points.size());
}

Int necklace_count(int n, Int M) {
    Int N = n + M + 1;
    BigInt acc = 0;
    for (Int d = 1; d <= N; ++d) {
        if (N % d != 0 || (n + 1) % d != 0) continue;
        acc += BigInt(euler_phi(d)) * big_binomial(N / d, (n + 1) / d);
    }
    if (acc % N != 0) fail(ErrorCode::Internal, "necklace count is not an integer");
    return to_int(acc / N, "necklace count");
}

}  // namespace weyldft
