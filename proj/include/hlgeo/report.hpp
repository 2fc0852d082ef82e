#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlgeo/catalog.hpp"
#include "hlgeo/ledger.hpp"

namespace hlgeo {

/// Exact residuals of the identities every Levi-Civita computation must satisfy.
struct IdentityDefects {
  Rational jacobi{0};
  Rational torsion{0};
  Rational metric_compatibility{0};
  Rational curvature_antisymmetry{0};
  Rational first_bianchi{0};
  Rational lowered_symmetry{0};
  Rational second_bianchi{0};

  bool all_zero() const;
};

struct SectionalSample {
  std::size_t i, j;  // 0-based coordinate plane span(E_i, E_j)
  std::optional<Rational> value;  // absent when the plane is degenerate
};

struct HermitianReport {
  Matrix<Rational> omega;
  Rational pfaffian{0};
  std::vector<std::pair<std::array<std::size_t, 2>, Vec<Rational>>> nijenhuis;  // nonzero, i < j
  std::vector<std::pair<std::array<std::size_t, 3>, Rational>> d_omega;     // nonzero, i < j < k
  std::vector<std::pair<std::array<std::size_t, 2>, Vec<Rational>>> nabla_j;   // nonzero, all (i, j)
  IntegrabilityVerdict integrable;
  KahlerVerdict almost_kahler;
};

struct IsotropyReport {
  std::vector<IsotropyDefects<Rational>> generators;
  /// Set for three generators: whether [D1,D2] = 2 D3, [D1,D3] = 2 D2 and
  /// [D2,D3] = -2 D1 hold exactly.
  std::optional<bool> sl2_closure;

  bool all_zero() const;
};

/// Everything computed for one metric Lie algebra.
struct GeometryReport {
  HomogeneousSpace space;
  Connection connection;
  Curvature curvature;
  SymmetryVerdict locally_symmetric;
  std::optional<Vec<Rational>> symmetry_witness_value;
  std::vector<SectionalSample> sectional;
  IdentityDefects defects;
  Matrix<Rational> killing;
  bool semisimple = false;
  std::optional<HermitianReport> hermitian;
  IsotropyReport isotropy;
};

/// Computes the full report. Deterministic for identical input.
GeometryReport full_report(const HomogeneousSpace& space);

/// Exact check of the sl(2,R) relations among three matrices.
bool closes_as_sl2(const Matrix<Rational>& d1, const Matrix<Rational>& d2, const Matrix<Rational>& d3);

IsotropyReport isotropy_report(const HomogeneousSpace& space);

/// Canonical JSON: lexicographic keys, rationals as strings, sparse tables
/// keyed by 1-based comma-separated indices.
nlohmann::json to_json(const GeometryReport& r);
nlohmann::json to_json(const DiscrepancyLedger& l);

struct TextStyle {
  bool color = false;
};

std::string render_text(const GeometryReport& r, const TextStyle& style = {});
std::string render_text(const DiscrepancyLedger& l, const TextStyle& style = {});

/// Two-space indented JSON followed by a newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace hlgeo
