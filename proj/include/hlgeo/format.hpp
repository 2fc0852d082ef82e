#pragma once

#include <string>
#include <vector>

#include "hlgeo/linalg.hpp"

namespace hlgeo {

/// Renders a coordinate vector as "2*E6 - 2*E3": positive terms first, then
/// negative ones, each group in basis order; unit coefficients are omitted.
/// The zero vector renders as "0".
std::string format_vector(const Vec<Rational>& v, const std::vector<std::string>& labels);

/// "E1,E2,E6" from 0-based indices.
std::string format_indices(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels);

/// Six significant digits, printf %g style.
std::string format_double(double v);

}  // namespace hlgeo
