#pragma once

#include "rootdata.hpp"

namespace weyldft {

// One symmetry of the extended diagram that descends to the weight
// grids.  `perm` has length rank+1 and acts on weight labels by
// relabelling: act(g, b)[j] = b[perm[j]].
struct GammaElement {
    std::vector<int> perm;
    int sign_det = 1;
    int sign_short = 1;
    int sign_long = 1;

    int sign(SignHom sigma) const;
};

class GammaGroup {
public:
    explicit GammaGroup(const RootSystemData& R);

    const std::vector<GammaElement>& elements() const { return elems_; }
    Int size() const { return static_cast<Int>(elems_.size()); }

    static IntVec act(const GammaElement& g, const IntVec& kac);

    // Orbit-stabilizer data for one weight label.
    Int stab_order(const IntVec& kac) const;
    IntVec lex_max(const IntVec& kac) const;
    bool is_lex_max(const IntVec& kac) const;

    // True when some stabilizing element carries sign -1 under sigma.
    bool stab_has_negative_sign(const IntVec& kac, SignHom sigma) const;

private:
    std::vector<GammaElement> elems_;
};

// h(lambda) = |Stab(lambda)| in the dual affine Weyl group times the
// label-symmetry stabilizer order; normalization weight of the weight
// label in the transform.
Int h_weight(const RootSystemData& R, const GammaGroup& G, const IntVec& kac);

}  // namespace weyldft
