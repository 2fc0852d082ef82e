#pragma once

#include <string>

#include "hlgeo/catalog.hpp"

namespace hlgeo {

/// Parses an algebra file:
///   {"dim": n, "basis": [...], "signature": [+-1...] | "gram": [[q...]...],
///    "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "2"}}], "J": [[q...]...],
///    "isotropy": [[[q...]...]...]}
/// Indices are 1-based with i < j; rationals are canonical strings "p" or "p/q".
/// Matrices are row-major. Unknown keys are rejected. Throws ParseError with
/// line and column; structural failures surface as ValidityError or
/// DimensionError from the component constructors.
HomogeneousSpace parse_algebra(const std::string& text, const std::string& name);

/// Reads and parses a file; the space is named after the file stem.
HomogeneousSpace load_algebra_file(const std::string& path);

/// Canonical serialization; parse_algebra(serialize_algebra(s)) == s.
std::string serialize_algebra(const HomogeneousSpace& space);

/// A catalog name or a path to an algebra file, validated.
HomogeneousSpace resolve_algebra(const std::string& name_or_path);

}  // namespace hlgeo
