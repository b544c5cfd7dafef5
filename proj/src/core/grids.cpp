#include "grids.hpp"

#include <algorithm>

#include "affine.hpp"

namespace weyldft {

IntVec point_lower_bounds(const RootSystemData& R, SignHom sigma) {
    require_admissible(R, sigma);
    const int n = R.rank;
    IntVec lo(n + 1, 0);
    switch (sigma) {
        case SignHom::Identity: break;
        case SignHom::Det: lo.assign(n + 1, 1); break;
        case SignHom::Short:
            for (int i : R.short_set) lo[i] = 1;
            break;
        case SignHom::Long:
            lo[0] = 1;
            for (int i : R.long_set) lo[i] = 1;
            break;
    }
    return lo;
}

IntVec weight_lower_bounds(const RootSystemData& R, SignHom sigma) {
    require_admissible(R, sigma);
    const int n = R.rank;
    IntVec lo(n + 1, 0);
    switch (sigma) {
        case SignHom::Identity: break;
        case SignHom::Det: lo.assign(n + 1, 1); break;
        case SignHom::Short:
            lo[0] = 1;
            for (int i : R.short_set) lo[i] = 1;
            break;
        case SignHom::Long:
            for (int i : R.long_set) lo[i] = 1;
            break;
    }
    return lo;
}

std::vector<IntVec> enumerate_labels(const IntVec& weights, const IntVec& lower, Int M) {
    const int n = static_cast<int>(weights.size()) - 1;
    std::vector<IntVec> out;
    IntVec cur(n + 1, 0);
    // Descending lexicographic order; coordinate 0 has weight 1.
    auto rec = [&](auto&& self, int pos, Int rem) -> void {
        if (pos == n) {
            // Last coordinate is forced by the remaining level.
            Int w = n == 0 ? 1 : weights[n];
            if (rem >= lower[n] * w && rem % w == 0) {
                cur[n] = rem / w;
                out.push_back(cur);
            }
            return;
        }
        Int w = pos == 0 ? 1 : weights[pos];
        for (Int x = rem / w; x >= lower[pos]; --x) {
            cur[pos] = x;
            self(self, pos + 1, rem - x * w);
        }
    };
    if (M >= 0) rec(rec, 0, M);
    return out;
}

bool congruence_general(const RootSystemData& R, const IntVec& kac, IntVec* q_out) {
    const int n = R.rank;
    IntVec q(n, 0);
    for (int i = 0; i < n; ++i) {
        Rat acc(0);
        for (int j = 0; j < n; ++j) acc += R.cartan_inv[i][j] * Rat(kac[j + 1]);
        if (acc.denominator() != 1) return false;
        q[i] = acc.numerator();
    }
    if (q_out) *q_out = std::move(q);
    return true;
}

bool congruence_simplified(const RootSystemData& R, const IntVec& kac) {
    const int n = R.rank;
    auto mod = [](Int a, Int m) { return ((a % m) + m) % m; };
    switch (R.type.family) {
        case Family::A: {
            Int s = 0;
            for (int i = 1; i <= n; ++i) s += Int(i) * kac[i];
            return mod(s, n + 1) == 0;
        }
        case Family::B: {
            Int s = 0;
            for (int i = 1; i <= n; i += 2) s += kac[i];
            return mod(s, 2) == 0;
        }
        case Family::C:
            return mod(kac[n], 2) == 0;
        case Family::D: {
            if (n % 2 == 0) {
                Int s1 = 0;
                if (n % 4 == 0) {
                    for (int i = 1; i <= n - 1; i += 2) s1 += kac[i];
                } else {
                    for (int i = 1; i <= n - 3; i += 2) s1 += kac[i];
                    s1 += kac[n];
                }
                return mod(s1, 2) == 0 && mod(kac[n - 1] + kac[n], 2) == 0;
            }
            Int s = 0;
            for (int i = 1; i <= n - 2; i += 2) s += 2 * kac[i];
            if (n % 4 == 1)
                s += 3 * kac[n - 1] + kac[n];
            else
                s += kac[n - 1] + 3 * kac[n];
            return mod(s, 4) == 0;
        }
        case Family::E:
            if (n == 6) return mod(kac[1] + 2 * kac[2] + kac[4] + 2 * kac[5], 3) == 0;
            if (n == 7) return mod(kac[4] + kac[6] + kac[7], 2) == 0;
            return true;  // E8
        case Family::F:
        case Family::G:
            return true;
    }
    return true;
}

void require_level(const RootSystemData& R, SignHom sigma, Int M, bool relaxed) {
    require_admissible(R, sigma);
    if (M < 1) fail(ErrorCode::LevelTooSmall, "grid level must be at least 1");
    if (!relaxed) {
        Int msig = generalized_coxeter(R, sigma);
        if (M <= msig)
            fail(ErrorCode::LevelTooSmall,
                 "level " + std::to_string(M) + " must exceed " + std::to_string(msig) + " for " +
                     to_string(R.type) + " with the " + to_string(sigma) +
                     " sign homomorphism (pass the relaxed option to allow it)");
    }
}

PointSet point_set(const RootSystemData& R, SignHom sigma, Int M, bool relaxed) {
    require_level(R, sigma, M, relaxed);
    PointSet out;
    out.type = R.type;
    out.sigma = sigma;
    out.M = M;
    IntVec lo = point_lower_bounds(R, sigma);
    for (const IntVec& kac : enumerate_labels(R.marks, lo, M)) {
        IntVec q;
        if (!congruence_general(R, kac, &q)) continue;
        GridPoint p;
        p.eps = epsilon(R, kac);
        p.kac = kac;
        p.q = std::move(q);
        out.points.push_back(std::move(p));
    }
    return out;
}

std::vector<IntVec> weight_labels_direct(const RootSystemData& R, const GammaGroup& G,
                                         SignHom sigma, Int M) {
    std::vector<IntVec> out;
    IntVec lo = weight_lower_bounds(R, sigma);
    for (const IntVec& kac : enumerate_labels(R.comarks, lo, M)) {
        if (!G.is_lex_max(kac)) continue;
        if (G.stab_has_negative_sign(kac, sigma)) continue;
        out.push_back(kac);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::pair<std::vector<IntVec>, std::vector<IntVec>> tilde_sets(const RootSystemData& R,
                                                               const GammaGroup& G, SignHom sigma,
                                                               Int M) {
    std::pair<std::vector<IntVec>, std::vector<IntVec>> out;
    if (M < 0) return out;
    IntVec lo(R.rank + 1, 0);
    for (const IntVec& kac : enumerate_labels(R.comarks, lo, M)) {
        if (!G.is_lex_max(kac)) continue;
        if (G.stab_has_negative_sign(kac, sigma))
            out.second.push_back(kac);
        else
            out.first.push_back(kac);
    }
    return out;
}

WeightSet weight_set_P(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M,
                       bool relaxed) {
    require_level(R, sigma, M, relaxed);
    WeightSet out;
    out.type = R.type;
    out.sigma = sigma;
    out.M = M;
    IntVec rho = rho_sigma(R, sigma);
    Int msig = generalized_coxeter(R, sigma);
    auto [plain, negative] = tilde_sets(R, G, sigma, M - msig);
    (void)negative;
    for (const IntVec& lam : plain) {
        WeightEntry e;
        e.kac.resize(R.rank + 1);
        for (int i = 0; i <= R.rank; ++i) e.kac[i] = lam[i] + rho[i];
        e.h = h_weight(R, G, e.kac);
        out.weights.push_back(std::move(e));
    }
    std::sort(out.weights.begin(), out.weights.end(),
              [](const WeightEntry& a, const WeightEntry& b) { return a.kac > b.kac; });
    return out;
}

WeightSet weight_set_Q(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M,
                       bool relaxed) {
    (void)G;
    require_level(R, sigma, M, relaxed);
    WeightSet out;
    out.type = R.type;
    out.sigma = sigma;
    out.M = M;
    IntVec lo = weight_lower_bounds(R, sigma);
    for (const IntVec& kac : enumerate_labels(R.comarks, lo, M)) {
        WeightEntry e;
        e.h = dual_stab_order(R, kac);
        e.kac = kac;
        out.weights.push_back(std::move(e));
    }
    return out;
}

}  // namespace weyldft
