#include "rootdata.hpp"

#include <algorithm>
#include <numeric>

namespace weyldft {

namespace {

IntMat zero_matrix(int n) { return IntMat(n, IntVec(n, 0)); }

// Simply laced chain/branch helper: put a single edge between 1-based
// nodes a and b.
void edge(IntMat& c, int a, int b) {
    c[a - 1][b - 1] = -1;
    c[b - 1][a - 1] = -1;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

bool RootSystemData::is_short(int i) const {
    return std::find(short_set.begin(), short_set.end(), i) != short_set.end();
}

RatMat invert_rational(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat a(n, RatVec(n)), inv(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        inv[i][i] = Rat(1);
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != Rat(0)) {
                pivot = r;
                break;
            }
        if (pivot < 0) fail(ErrorCode::Internal, "singular matrix in invert_rational");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rat p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == Rat(0)) continue;
            Rat f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

Int int_det(const IntMat& m) {
    // Fraction-free Gaussian elimination (Bareiss).
    const int n = static_cast<int>(m.size());
    IntMat a = m;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

void build_tables(RootSystemData& R) {
    const int n = R.rank;
    R.cartan = zero_matrix(n);
    IntMat& C = R.cartan;
    R.marks.assign(n + 1, 0);
    R.comarks.assign(n + 1, 0);
    IntVec& m = R.marks;     // 1-based, index 0 unused here
    IntVec& mv = R.comarks;

    switch (R.type.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) edge(C, i, i + 1);
            for (int i = 1; i <= n; ++i) C[i - 1][i - 1] = 2, m[i] = 1, mv[i] = 1;
            R.weyl_order = factorial(n + 1);
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) edge(C, i, i + 1);
            for (int i = 1; i <= n; ++i) C[i - 1][i - 1] = 2;
            C[n - 2][n - 1] = -2;  // alpha_n is the short root
            R.short_set = {n};
            for (int i = 1; i < n; ++i) R.long_set.push_back(i);
            R.length_ratio = 2;
            m[1] = 1;
            for (int i = 2; i <= n; ++i) m[i] = 2;
            for (int i = 1; i < n; ++i) mv[i] = 2;
            mv[n] = 1;
            R.weyl_order = factorial(n) * (Int(1) << n);
            break;
        case Family::C:
            for (int i = 1; i < n; ++i) edge(C, i, i + 1);
            for (int i = 1; i <= n; ++i) C[i - 1][i - 1] = 2;
            C[n - 1][n - 2] = -2;  // alpha_n is the long root
            R.long_set = {n};
            for (int i = 1; i < n; ++i) R.short_set.push_back(i);
            R.length_ratio = 2;
            for (int i = 1; i < n; ++i) m[i] = 2;
            m[n] = 1;
            mv[1] = 1;
            for (int i = 2; i <= n; ++i) mv[i] = 2;
            R.weyl_order = factorial(n) * (Int(1) << n);
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) edge(C, i, i + 1);
            edge(C, n - 2, n);
            for (int i = 1; i <= n; ++i) C[i - 1][i - 1] = 2;
            m[1] = 1;
            for (int i = 2; i <= n - 2; ++i) m[i] = 2;
            m[n - 1] = 1;
            m[n] = 1;
            mv = m;
            R.weyl_order = factorial(n) * (Int(1) << (n - 1));
            break;
        case Family::E:
            // Numbering matched to the Kac-coordinate permutation tables:
            // a chain 1..(n-1) with node n attached to node 3 (E6, E7) or
            // node 5 (E8).
            for (int i = 1; i < n - 1; ++i) edge(C, i, i + 1);
            edge(C, n == 8 ? 5 : 3, n);
            for (int i = 1; i <= n; ++i) C[i - 1][i - 1] = 2;
            if (n == 6) {
                m = IntVec{0, 1, 2, 3, 2, 1, 2};
                R.weyl_order = 51840;
            } else if (n == 7) {
                m = IntVec{0, 2, 3, 4, 3, 2, 1, 2};
                R.weyl_order = 2903040;
            } else {
                m = IntVec{0, 2, 3, 4, 5, 6, 4, 2, 3};
                R.weyl_order = 696729600;
            }
            mv = m;
            break;
        case Family::F:
            // 1 - 2 => 3 - 4 with alpha_1, alpha_2 long.
            edge(C, 1, 2);
            edge(C, 3, 4);
            C[1][2] = -2;
            C[2][1] = -1;
            for (int i = 1; i <= 4; ++i) C[i - 1][i - 1] = 2;
            R.long_set = {1, 2};
            R.short_set = {3, 4};
            R.length_ratio = 2;
            m = IntVec{0, 2, 3, 4, 2};
            mv = IntVec{0, 2, 4, 3, 2};
            R.weyl_order = 1152;
            break;
        case Family::G:
            // alpha_1 short, alpha_2 long.
            C[0][0] = 2;
            C[1][1] = 2;
            C[0][1] = -1;
            C[1][0] = -3;
            R.short_set = {1};
            R.long_set = {2};
            R.length_ratio = 3;
            m = IntVec{0, 3, 2};
            mv = IntVec{0, 2, 3};
            R.weyl_order = 12;
            break;
    }
}

void finish(RootSystemData& R) {
    const int n = R.rank;
    R.cartan_inv = invert_rational(R.cartan);
    R.coxeter = 1 + std::accumulate(R.marks.begin() + 1, R.marks.end(), Int(0));
    Int cox2 = 1 + std::accumulate(R.comarks.begin() + 1, R.comarks.end(), Int(0));
    if (R.coxeter != cox2) fail(ErrorCode::Internal, "mark/comark sums disagree");
    R.connection_index = int_det(R.cartan);
    for (int i = 1; i <= n; ++i)
        if (R.comarks[i] == 1) R.unit_comark_indices.push_back(i);
    if (static_cast<Int>(R.unit_comark_indices.size()) + 1 != R.connection_index)
        fail(ErrorCode::Internal, "|J| + 1 != det C");

    // Highest root in the alpha-check basis and highest dual root in the
    // alpha basis.  With long roots normalized to squared length 2, a
    // long simple root has alpha = alpha-check, a short one differs by
    // the length ratio.
    R.affine_comarks.assign(n + 1, 0);
    R.dual_affine_comarks.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        if (R.is_short(i)) {
            if (R.marks[i] % R.length_ratio != 0)
                fail(ErrorCode::Internal, "non-integer affine comark");
            R.affine_comarks[i] = R.marks[i] / R.length_ratio;
            R.dual_affine_comarks[i] = R.comarks[i];
        } else {
            R.affine_comarks[i] = R.marks[i];
            if (R.comarks[i] % R.length_ratio != 0)
                fail(ErrorCode::Internal, "non-integer dual affine comark");
            R.dual_affine_comarks[i] = R.comarks[i] / R.length_ratio;
        }
    }

    // Extended Cartan matrices.  The node-0 rows/columns follow from the
    // highest (dual) root expansions; both null-vector identities are
    // checked so a transcription error in any table fails loudly here.
    auto extend = [&](const IntMat& C, const IntVec& top, const IntVec& side) {
        IntMat e(n + 1, IntVec(n + 1, 0));
        e[0][0] = 2;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) e[i][j] = C[i - 1][j - 1];
        for (int j = 1; j <= n; ++j) {
            Int s = 0;
            for (int i = 1; i <= n; ++i) s += top[i] * C[i - 1][j - 1];
            e[0][j] = -s;
        }
        for (int j = 1; j <= n; ++j) {
            Int s = 0;
            for (int i = 1; i <= n; ++i) s += side[i] * C[j - 1][i - 1];
            e[j][0] = -s;
        }
        for (int i = 0; i <= n; ++i) {
            Int right = 0, left = 0;
            for (int j = 0; j <= n; ++j) {
                right += e[i][j] * (j == 0 ? 1 : side[j]);
                left += (j == 0 ? 1 : top[j]) * e[j][i];
            }
            if (right != 0 || left != 0)
                fail(ErrorCode::Internal, "extended Cartan null-vector check failed");
        }
        return e;
    };
    R.ext_cartan = extend(R.cartan, R.marks, R.affine_comarks);
    IntMat ct(n, IntVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ct[i][j] = R.cartan[j][i];
    R.dual_ext_cartan = extend(ct, R.comarks, R.dual_affine_comarks);

    // Symmetrizability: C_ij d_j == C_ji d_i with d = squared half-lengths.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Int di = R.is_short(i) ? 1 : R.length_ratio;
            Int dj = R.is_short(j) ? 1 : R.length_ratio;
            if (R.cartan[i - 1][j - 1] * dj != R.cartan[j - 1][i - 1] * di)
                fail(ErrorCode::Internal, "Cartan matrix not symmetrizable");
        }
}

}  // namespace

RootSystemData build(AlgebraType t) {
    RootSystemData R;
    R.type = t;
    R.rank = t.rank;
    build_tables(R);
    finish(R);
    return R;
}

bool sign_admissible(const RootSystemData& R, SignHom sigma) {
    if (sigma == SignHom::Short || sigma == SignHom::Long) return !R.simply_laced();
    return true;
}

void require_admissible(const RootSystemData& R, SignHom sigma) {
    if (!sign_admissible(R, sigma))
        fail(ErrorCode::InadmissibleSign,
             to_string(sigma) + " sign homomorphism needs two root lengths; " + to_string(R.type) +
                 " is simply laced");
}

IntVec rho_sigma(const RootSystemData& R, SignHom sigma) {
    require_admissible(R, sigma);
    IntVec rho(R.rank + 1, 0);
    switch (sigma) {
        case SignHom::Identity: break;
        case SignHom::Det:
            rho.assign(R.rank + 1, 1);
            break;
        case SignHom::Short:
            rho[0] = 1;
            for (int i : R.short_set) rho[i] = 1;
            break;
        case SignHom::Long:
            for (int i : R.long_set) rho[i] = 1;
            break;
    }
    return rho;
}

Int generalized_coxeter(const RootSystemData& R, SignHom sigma) {
    IntVec rho = rho_sigma(R, sigma);
    Int s = rho[0];
    for (int i = 1; i <= R.rank; ++i) s += R.comarks[i] * rho[i];
    return s;
}

}  // namespace weyldft
