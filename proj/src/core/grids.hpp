#pragma once

#include "gamma.hpp"
#include "rootdata.hpp"

namespace weyldft {

// One sample point of the discretization: Kac coordinates, the
// alpha-check numerators q (the point itself is q / M), and the orbit
// weight eps = |W| / |Stab|.
struct GridPoint {
    IntVec kac;
    IntVec q;
    Int eps;
};

struct PointSet {
    AlgebraType type;
    SignHom sigma = SignHom::Identity;
    Int M = 0;
    std::vector<GridPoint> points;
};

struct WeightEntry {
    IntVec kac;  // [b_0, ..., b_n], comark-weighted level M
    Int h;       // normalization weight
};

struct WeightSet {
    AlgebraType type;
    SignHom sigma = SignHom::Identity;
    Int M = 0;
    std::vector<WeightEntry> weights;
};

// Per-coordinate lower bounds (0 or 1) describing which Kac coordinates
// must be strictly positive for a given sign homomorphism.
IntVec point_lower_bounds(const RootSystemData& R, SignHom sigma);
IntVec weight_lower_bounds(const RootSystemData& R, SignHom sigma);

// All labels x >= lower with x_0 + sum_{i>=1} weights_i x_i == M, in
// descending lexicographic order.
std::vector<IntVec> enumerate_labels(const IntVec& weights, const IntVec& lower, Int M);

// Root-lattice membership of a point label: s_1..s_n must be C q for an
// integer vector q.  The general test solves the system exactly; the
// simplified test uses one or two congruences special to each family.
bool congruence_general(const RootSystemData& R, const IntVec& kac, IntVec* q_out);
bool congruence_simplified(const RootSystemData& R, const IntVec& kac);

// Level admissibility: strict mode requires M > m^sigma so the sets are
// nonempty; relaxed mode only requires M >= 1.
void require_level(const RootSystemData& R, SignHom sigma, Int M, bool relaxed);

PointSet point_set(const RootSystemData& R, SignHom sigma, Int M, bool relaxed = false);

// Weight labels on the weight-lattice side: orbit representatives under
// the diagram symmetries, built through the rho-shift from level
// M - m^sigma.
WeightSet weight_set_P(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M,
                       bool relaxed = false);

// Weight labels on the root-lattice side: all sign-positive labels of
// level M, no symmetry quotient.
WeightSet weight_set_Q(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M,
                       bool relaxed = false);

// Weight labels built without the rho-shift: sign-positive labels of
// level M that are lexicographically maximal in their symmetry orbit
// and whose stabilizer carries no -1 sign.  Used to cross-check the
// shifted construction.
std::vector<IntVec> weight_labels_direct(const RootSystemData& R, const GammaGroup& G,
                                         SignHom sigma, Int M);

// Lex-max representatives of the full level-M label simplex, split by
// whether the symmetry stabilizer acts with a -1 sign: first component
// all-plus, second contains a negative.
std::pair<std::vector<IntVec>, std::vector<IntVec>> tilde_sets(const RootSystemData& R,
                                                               const GammaGroup& G, SignHom sigma,
                                                               Int M);

}  // namespace weyldft
