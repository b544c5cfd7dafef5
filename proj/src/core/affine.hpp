#pragma once

#include "rootdata.hpp"

namespace weyldft {

// Result of pulling an arbitrary lattice point back into the fundamental
// domain of the affine Weyl group.  The input satisfies
//   q_in = w_q * q + M * shift
// where w_q is the alpha-check-coordinate matrix of the finite Weyl part
// and shift is an integer vector (a translation by M times a coroot
// lattice element).
struct ReducedPoint {
    IntVec q;      // representative, alpha-check numerators, 0-based length n
    IntVec kac;    // [s_0, ..., s_n], all >= 0, s_0 + sum marks_i s_i = M
    IntMat w_q;    // finite Weyl part acting on alpha-check coordinates
    IntMat w_omega;  // same element acting on omega coordinates
    IntVec shift;
    int sign_det = 1;
    int sign_short = 1;
    int sign_long = 1;
};

// Kac coordinates of q at level M: s_i = (C q)_i, s_0 = M - sum marks_i s_i.
IntVec kac_coordinates(const RootSystemData& R, const IntVec& q, Int M);

ReducedPoint reduce_point(const RootSystemData& R, const IntVec& q_in, Int M);

// Validation helpers; throw MalformedKac on bad shape, negativity or
// level mismatch.  Point-side levels weigh with marks, weight-side with
// comarks.
void validate_point_kac(const RootSystemData& R, const IntVec& kac, Int M);
void validate_weight_kac(const RootSystemData& R, const IntVec& kac, Int M);

// Order of the reflection subgroup generated by the nodes listed in
// `nodes` inside the (extended) diagram described by `ext`.
Int subdiagram_weyl_order(const IntMat& ext, const std::vector<int>& nodes);

// Affine-Weyl stabilizer order of a point with the given Kac coordinates
// (zero entries select nodes of the extended diagram).
Int point_stab_order(const RootSystemData& R, const IntVec& kac);

// epsilon(s) = |W| / |Stab(s)|.
Int epsilon(const RootSystemData& R, const IntVec& kac);

// Same construction on the dual extended diagram, for weight labels.
Int dual_stab_order(const RootSystemData& R, const IntVec& kac);

}  // namespace weyldft
