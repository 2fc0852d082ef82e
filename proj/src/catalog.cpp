#include "hlgeo/catalog.hpp"

#include <algorithm>

namespace hlgeo {

void validate(const HomogeneousSpace& space) {
  const std::size_t n = space.alg.dim();
  if (space.metric.dim() != n) throw DimensionError("metric dimension does not match algebra dimension");
  const auto jac = jacobi_defect(space.alg);
  if (jac.witness) {
    const auto& w = *jac.witness;
    throw ValidityError("jacobi_defect", {w[0] + 1, w[1] + 1, w[2] + 1},
                        "Jacobi identity fails: jacobi_defect = " + to_string(jac.defect) + " at (E" +
                            std::to_string(w[0] + 1) + ",E" + std::to_string(w[1] + 1) + ",E" +
                            std::to_string(w[2] + 1) + ")");
  }
  if (space.acs) {
    if (space.acs->dim() != n) throw DimensionError("J dimension does not match algebra dimension");
    if (auto bad = compatibility_violation(space.metric, *space.acs)) {
      throw ValidityError("J_compatibility", {(*bad)[0] + 1, (*bad)[1] + 1},
                          "<JX,JY> != <X,Y> at (E" + std::to_string((*bad)[0] + 1) + ",E" +
                              std::to_string((*bad)[1] + 1) + ")");
    }
  }
  for (const auto& d : space.isotropy)
    if (d.rows() != n || d.cols() != n) throw DimensionError("isotropy generator has wrong shape");
}

namespace catalog {

namespace {

using Q = Rational;
using Mat = Matrix<Rational>;

Mat mat2(int a, int b, int c, int d) {
  Mat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Vec<Q> flatten(const Mat& m) { return m.data(); }

/// Coordinates of target in the span of basis; exact, throws when not in the span.
Vec<Q> coordinates_in(const std::vector<Vec<Q>>& basis, const Vec<Q>& target) {
  const std::size_t k = basis.size();
  Mat normal(k, k);
  Vec<Q> rhs(k, Q(0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t r = 0; r < target.size(); ++r) normal(a, b) += basis[a][r] * basis[b][r];
    for (std::size_t r = 0; r < target.size(); ++r) rhs[a] += basis[a][r] * target[r];
  }
  Vec<Q> x = solve(normal, rhs);
  Vec<Q> back(target.size(), Q(0));
  for (std::size_t a = 0; a < k; ++a) axpy(x[a], basis[a], back);
  if (back != target) throw ValidityError("closure", {}, "commutator leaves the span of the given matrices");
  return x;
}

Vec<Q> concat(const Vec<Q>& a, const Vec<Q>& b) {
  Vec<Q> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vec<Q> head(const Vec<Q>& v, std::size_t n) { return Vec<Q>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }
Vec<Q> tail(const Vec<Q>& v, std::size_t n) { return Vec<Q>(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()); }

/// Builds an algebra on dimension n from a bilinear bracket evaluated on basis pairs.
template <class F>
LieAlgebra from_bracket_rule(std::size_t n, F rule) {
  std::vector<LieAlgebra::Bracket> bs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<Q> c = rule(basis_vector<Q>(n, i), basis_vector<Q>(n, j));
      if (!is_zero(c)) bs.push_back({i, j, std::move(c)});
    }
  return LieAlgebra(LieAlgebra::default_labels(n), bs);
}

/// ad_a (+) ad_a for a running over the sl(2,R) basis: the so(1,2) isotropy
/// generators shared by all four groups.
std::vector<Mat> doubled_adjoint_generators() {
  const LieAlgebra p = sl2();
  std::vector<Mat> out;
  for (std::size_t a = 0; a < 3; ++a) {
    const Mat ad = ad_matrix(p, basis_vector<Q>(3, a));
    out.push_back(block_diagonal(ad, ad));
  }
  return out;
}

Metric doubled_trace_metric() {
  const Mat g = half_trace_gram(sl2_matrices());
  return Metric(block_diagonal(g, g));
}

const std::string kNotesDerived = "structure constants derived from the construction, not transcribed";

}  // namespace

std::vector<Matrix<Rational>> sl2_matrices() { return {mat2(1, 0, 0, -1), mat2(0, 1, 1, 0), mat2(0, 1, -1, 0)}; }

LieAlgebra algebra_from_matrices(const std::vector<Matrix<Rational>>& basis) {
  std::vector<Vec<Q>> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  const std::size_t n = basis.size();
  std::vector<LieAlgebra::Bracket> bs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<Q> c = coordinates_in(flat, flatten(commutator(basis[i], basis[j])));
      if (!is_zero(c)) bs.push_back({i, j, std::move(c)});
    }
  return LieAlgebra(LieAlgebra::default_labels(n), bs);
}

Matrix<Rational> half_trace_gram(const std::vector<Matrix<Rational>>& basis) {
  const std::size_t n = basis.size();
  Mat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat p = basis[i] * basis[j];
      Q tr(0);
      for (std::size_t d = 0; d < p.rows(); ++d) tr += p(d, d);
      g(i, j) = tr / 2;
    }
  return g;
}

LieAlgebra sl2() { return algebra_from_matrices(sl2_matrices()); }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim();
  return from_bracket_rule(na + b.dim(), [&](const Vec<Q>& x, const Vec<Q>& y) {
    return concat(bracket(a, head(x, na), head(y, na)), bracket(b, tail(x, na), tail(y, na)));
  });
}

LieAlgebra complexification(const LieAlgebra& p) {
  const std::size_t n = p.dim();
  return from_bracket_rule(2 * n, [&](const Vec<Q>& x, const Vec<Q>& y) {
    const Vec<Q> a = head(x, n), b = tail(x, n), c = head(y, n), d = tail(y, n);
    return concat(bracket(p, a, c) - bracket(p, b, d), bracket(p, a, d) + bracket(p, b, c));
  });
}

LieAlgebra semidirect_adjoint(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  return from_bracket_rule(2 * n, [&](const Vec<Q>& x, const Vec<Q>& y) {
    const Vec<Q> u = head(x, n), p = tail(x, n), v = head(y, n), q = tail(y, n);
    return concat(bracket(a, u, v), bracket(a, u, q) - bracket(a, v, p));
  });
}

LieAlgebra two_step_nilpotent(std::size_t dim_a, std::size_t dim_b, const std::vector<LieAlgebra::Bracket>& c) {
  const std::size_t n = dim_a + dim_b;
  std::vector<LieAlgebra::Bracket> bs;
  for (const auto& e : c) {
    if (e.i >= e.j || e.j >= dim_a || e.coeffs.size() != dim_b)
      throw DimensionError("two_step_nilpotent: malformed cocycle entry");
    Vec<Q> coeffs(n, Q(0));
    std::copy(e.coeffs.begin(), e.coeffs.end(), coeffs.begin() + static_cast<std::ptrdiff_t>(dim_a));
    if (!is_zero(coeffs)) bs.push_back({e.i, e.j, std::move(coeffs)});
  }
  return LieAlgebra(LieAlgebra::default_labels(n), bs);
}

Matrix<Rational> block_diagonal(const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> kEntries = {
      {"sl2_x_sl2", "§6.1", "sl(2,R) + sl(2,R), product of two anti-de Sitter factors"},
      {"sl2_c", "§6.2", "sl(2,C) as the complexification of sl(2,R); J integrable"},
      {"sl2_semidirect_r3", "§6.3", "sl(2,R) x R^3 with the adjoint action; symmetric as a pseudo-Riemannian space"},
      {"n_sl2", "§6.4", "2-step nilpotent algebra on sl(2,R) + sl(2,R) with the sl(2,R) bracket as cocycle"},
      {"sl2r_biinvariant", "§6", "sl(2,R) with the bi-invariant trace form, constant curvature -1"},
      {"flat_c3", "§1", "abelian R^6 with the standard Hermite-Lorentz structure (flat control)"},
  };
  return kEntries;
}

bool contains(const std::string& name) {
  const auto& es = entries();
  return std::any_of(es.begin(), es.end(), [&](const Entry& e) { return e.name == name; });
}

HomogeneousSpace build(const std::string& name) {
  HomogeneousSpace s;
  s.name = name;
  if (name == "sl2r_biinvariant") {
    s.alg = sl2();
    s.metric = Metric(half_trace_gram(sl2_matrices()));
    for (std::size_t a = 0; a < 3; ++a) s.isotropy.push_back(ad_matrix(s.alg, basis_vector<Q>(3, a)));
    s.notes = {kNotesDerived, "metric <X,Y> = 1/2 trace(XY); no almost complex structure in odd dimension"};
    return s;
  }

  if (name == "sl2_x_sl2") {
    s.alg = direct_sum(sl2(), sl2());
    s.notes = {kNotesDerived, "direct sum of two sl(2,R) copies"};
  } else if (name == "sl2_c") {
    s.alg = complexification(sl2());
    s.notes = {kNotesDerived, "E_{i+3} = sqrt(-1) X_i; metric is the real part of the sesquilinear extension"};
  } else if (name == "sl2_semidirect_r3") {
    s.alg = semidirect_adjoint(sl2());
    s.notes = {kNotesDerived, "R^3 identified with sl(2,R) carrying the adjoint action"};
  } else if (name == "n_sl2") {
    s.alg = two_step_nilpotent(3, 3, sl2().brackets());
    s.notes = {kNotesDerived, "cocycle c = sl(2,R) bracket"};
  } else if (name == "flat_c3") {
    s.alg = LieAlgebra::abelian(6);
    s.notes = {"abelian control case"};
  } else {
    throw UnknownAlgebraError("unknown algebra '" + name + "'");
  }
  s.metric = doubled_trace_metric();
  s.acs = AlmostComplex::standard(6);
  s.isotropy = doubled_adjoint_generators();
  return s;
}

}  // namespace catalog
}  // namespace hlgeo
