#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlgeo/hermitian.hpp"

namespace hlgeo {

/// A left-invariant (almost) Hermite-Lorentz structure on a Lie group, given
/// at the Lie algebra level.
struct HomogeneousSpace {
  std::string name;
  LieAlgebra alg;
  Metric metric;
  std::optional<AlmostComplex> acs;
  std::vector<Matrix<Rational>> isotropy;  // candidate so(1,2) generators
  std::vector<std::string> notes;

  bool operator==(const HomogeneousSpace& o) const {
    return name == o.name && alg == o.alg && metric == o.metric && acs == o.acs && isotropy == o.isotropy;
  }
};

/// Checks Jacobi, dimension agreement, and J-compatibility. Throws
/// ValidityError naming the violated invariant and 1-based witness indices.
void validate(const HomogeneousSpace& space);

namespace catalog {

struct Entry {
  std::string name;
  std::string reference;  // section label shown in the catalog listing
  std::string description;
};

/// Catalog entries in canonical order.
const std::vector<Entry>& entries();

bool contains(const std::string& name);

/// Builds a catalog space. Throws UnknownAlgebraError.
HomogeneousSpace build(const std::string& name);

// Constructions the catalog is assembled from. Exposed for tests.

/// X1 = diag(1,-1), X2 = [[0,1],[1,0]], X3 = [[0,1],[-1,0]].
std::vector<Matrix<Rational>> sl2_matrices();

/// Structure constants of the span of the given matrices under the commutator.
/// Throws ValidityError if the span is not closed.
LieAlgebra algebra_from_matrices(const std::vector<Matrix<Rational>>& basis);

/// Gram matrix of <X,Y> = 1/2 trace(XY).
Matrix<Rational> half_trace_gram(const std::vector<Matrix<Rational>>& basis);

LieAlgebra sl2();
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
/// p + i p as a real algebra on p (+) p: [(a,b),(c,d)] = ([a,c]-[b,d], [a,d]+[b,c]).
LieAlgebra complexification(const LieAlgebra& p);
/// a (x) a with a acting on the second factor by its adjoint representation.
LieAlgebra semidirect_adjoint(const LieAlgebra& a);
/// a (+) b with [u, v] = c(u, v) for u, v in a and 0 otherwise; c is given by
/// its values on basis pairs i < j of a, as coordinates in b.
LieAlgebra two_step_nilpotent(std::size_t dim_a, std::size_t dim_b,
                              const std::vector<LieAlgebra::Bracket>& c);

Matrix<Rational> block_diagonal(const Matrix<Rational>& a, const Matrix<Rational>& b);

}  // namespace catalog
}  // namespace hlgeo
