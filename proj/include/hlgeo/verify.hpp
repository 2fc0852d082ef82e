#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hlgeo/catalog.hpp"

namespace hlgeo {

struct Check {
  std::string module;  // lie_core, metric_geom, hermitian, catalog, geodesics, cli
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifySuite {
  std::string algebra;
  std::vector<Check> checks;

  bool passed() const;
};

/// Expected verdicts for the catalog spaces; empty for anything else.
struct ExpectedVerdicts {
  std::optional<bool> integrable;
  std::optional<bool> almost_kahler;
  std::optional<bool> locally_symmetric;
};
ExpectedVerdicts expected_verdicts(const std::string& name);

/// Small random rational p/q with |p| <= 5, 1 <= q <= 4.
Rational random_rational(std::mt19937_64& gen);
Vec<Rational> random_rational_vector(std::mt19937_64& gen, std::size_t n);

/// Every invariant and published-value oracle that applies to the space.
VerifySuite verify_space(const HomogeneousSpace& space);

std::string render_verify(const std::vector<VerifySuite>& suites, bool color = false);

}  // namespace hlgeo
