#pragma once

#include <string>

#include "grids.hpp"
#include "transforms.hpp"

namespace weyldft {

// JSON / CSV serialization.  JSON field order is fixed so identical
// inputs produce byte-identical files.

std::string points_to_json(const PointSet& F);
std::string points_to_csv(const PointSet& F);
std::string weights_to_json(const WeightSet& L);
std::string weights_to_csv(const WeightSet& L);

// Sample table: {"algebra","sigma","M","values":[{"re","im"},...]}
// aligned with the serialized point order.  Throws GridMismatch when
// the header does not match the expected grid, InvalidArgument on
// malformed JSON.
std::vector<Complex> samples_from_json(const std::string& text, const PointSet& F);

std::string spectrum_to_json(const WeightSet& L, const std::vector<Complex>& coeffs);
std::string hartley_spectrum_to_json(const WeightSet& L, const std::vector<double>& coeffs);

}  // namespace weyldft
