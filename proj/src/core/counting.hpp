#pragma once

#include "gamma.hpp"
#include "grids.hpp"
#include "rootdata.hpp"

namespace weyldft {

// |Lambda_M|: nonnegative labels with comark-weighted level M (0 when
// M < 0).
Int denumerant(const RootSystemData& R, Int M);

// Closed-form size of the weight-lattice label set at level M.
Int closed_count(const RootSystemData& R, SignHom sigma, Int M);

// Same number obtained by orbit counting over the level-(M - m^sigma)
// label simplex.
Int burnside_count(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M);

// Same number by direct enumeration of the point or weight sets.
Int enumerated_weight_count(const RootSystemData& R, const GammaGroup& G, SignHom sigma, Int M);
Int enumerated_point_count(const RootSystemData& R, SignHom sigma, Int M);

// Independent count of cyclic binary-bracelet style orbit classes used
// to cross-check the type-A closed form: orbits of compositions of
// n + M + 1 into n + 1 cyclically-arranged positive parts.
Int necklace_count(int n, Int M);

Int binomial(Int a, Int b);
Int euler_phi(Int d);

}  // namespace weyldft
