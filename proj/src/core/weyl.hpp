#pragma once

#include "rootdata.hpp"

namespace weyldft {

// One Weyl group element.  `mat` acts on weight (omega) coordinates by
// left multiplication; the action on point (alpha-check) coordinates is
// by the transpose of the inverse, which for orthogonal generator
// products is just the transpose of `mat` composed appropriately -- the
// q-side matrix is stored separately to keep both actions O(n^2).
struct WeylElement {
    IntMat mat;       // omega-coordinate action
    IntMat mat_q;     // alpha-check-coordinate action
    int sign_det;     // det sign
    int sign_short;   // +1 unless an odd number of short reflections
    int sign_long;
};

class WeylGroup {
public:
    // Enumerates the full group via breadth-first search over the simple
    // reflections.  Throws GroupTooLarge when the order exceeds `cap`.
    WeylGroup(const RootSystemData& R, Int cap);

    const std::vector<WeylElement>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    const WeylElement& identity() const { return elems_[0]; }

    // Generator matrices, 1-based reflection index.
    const IntMat& generator(int i) const { return gen_[i - 1]; }
    const IntMat& generator_q(int i) const { return gen_q_[i - 1]; }

    int sign_of(SignHom sigma, const WeylElement& w) const;

private:
    std::vector<WeylElement> elems_;
    std::vector<IntMat> gen_, gen_q_;
};

// Matrix helpers shared with the affine-reduction code.
IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& m, const IntVec& v);

// Simple-reflection matrices in each coordinate system.
IntMat reflection_matrix_omega(const RootSystemData& R, int i);
IntMat reflection_matrix_q(const RootSystemData& R, int i);

}  // namespace weyldft
