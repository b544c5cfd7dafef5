#include "weyl.hpp"

#include <map>

namespace weyldft {

IntMat identity_matrix(int n) {
    IntMat m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int n = static_cast<int>(a.size());
    IntMat c(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Int aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
    const int n = static_cast<int>(m.size());
    IntVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

IntMat reflection_matrix_omega(const RootSystemData& R, int i) {
    const int n = R.rank;
    IntMat m = identity_matrix(n);
    for (int j = 0; j < n; ++j) m[j][i - 1] -= R.cartan[i - 1][j];
    return m;
}

IntMat reflection_matrix_q(const RootSystemData& R, int i) {
    const int n = R.rank;
    IntMat m = identity_matrix(n);
    for (int j = 0; j < n; ++j) m[i - 1][j] -= R.cartan[i - 1][j];
    return m;
}

WeylGroup::WeylGroup(const RootSystemData& R, Int cap) {
    const int n = R.rank;
    if (R.weyl_order > cap)
        fail(ErrorCode::GroupTooLarge,
             "Weyl group of " + to_string(R.type) + " has order " + std::to_string(R.weyl_order) +
                 ", above the enumeration cap " + std::to_string(cap));

    gen_.reserve(n);
    gen_q_.reserve(n);
    for (int i = 1; i <= n; ++i) {
        gen_.push_back(reflection_matrix_omega(R, i));
        gen_q_.push_back(reflection_matrix_q(R, i));
    }

    std::map<IntMat, std::size_t> seen;
    WeylElement id{identity_matrix(n), identity_matrix(n), 1, 1, 1};
    elems_.push_back(id);
    seen.emplace(id.mat, 0);

    std::size_t frontier_begin = 0;
    while (frontier_begin < elems_.size()) {
        std::size_t frontier_end = elems_.size();
        for (std::size_t e = frontier_begin; e < frontier_end; ++e)
            for (int i = 1; i <= n; ++i) {
                // Append a reflection on the right: w' = w r_i.
                IntMat m = mat_mul(elems_[e].mat, gen_[i - 1]);
                if (seen.count(m)) continue;
                WeylElement w;
                w.mat = std::move(m);
                w.mat_q = mat_mul(elems_[e].mat_q, gen_q_[i - 1]);
                w.sign_det = -elems_[e].sign_det;
                w.sign_short = elems_[e].sign_short * (R.is_short(i) ? -1 : 1);
                w.sign_long =
                    elems_[e].sign_long * (!R.simply_laced() && !R.is_short(i) ? -1 : 1);
                seen.emplace(w.mat, elems_.size());
                elems_.push_back(std::move(w));
            }
        frontier_begin = frontier_end;
    }
    if (static_cast<Int>(elems_.size()) != R.weyl_order)
        fail(ErrorCode::Internal, "Weyl enumeration size mismatch for " + to_string(R.type));
}

int WeylGroup::sign_of(SignHom sigma, const WeylElement& w) const {
    switch (sigma) {
        case SignHom::Identity: return 1;
        case SignHom::Det: return w.sign_det;
        case SignHom::Short: return w.sign_short;
        case SignHom::Long: return w.sign_long;
    }
    return 1;
}

}  // namespace weyldft
