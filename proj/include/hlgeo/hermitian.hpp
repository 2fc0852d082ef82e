#pragma once

#include <array>
#include <optional>

#include "hlgeo/curvature.hpp"

namespace hlgeo {

/// Matrix of an almost complex structure in the algebra basis (column i is J E_i).
template <class T>
class BasicAlmostComplex {
 public:
  BasicAlmostComplex() = default;

  explicit BasicAlmostComplex(Matrix<T> j) : j_(std::move(j)) {
    if (!j_.square()) throw DimensionError("J must be square");
    const Matrix<T> sq = j_ * j_ + Matrix<T>::identity(j_.rows());
    if (!is_zero(sq)) {
      for (std::size_t c = 0; c < sq.cols(); ++c)
        for (std::size_t r = 0; r < sq.rows(); ++r)
          if (!scalar_is_zero(sq(r, c)))
            throw ValidityError("J_squared", {c + 1}, "J^2 != -Id on basis vector E" + std::to_string(c + 1));
    }
  }

  /// E_i -> E_{i+m}, E_{i+m} -> -E_i for dimension 2m.
  static BasicAlmostComplex standard(std::size_t n) {
    if (n % 2 != 0) throw DimensionError("standard J needs even dimension");
    const std::size_t m = n / 2;
    Matrix<T> j(n, n);
    for (std::size_t i = 0; i < m; ++i) {
      j(i + m, i) = T(1);
      j(i, i + m) = T(-1);
    }
    return BasicAlmostComplex(std::move(j));
  }

  std::size_t dim() const { return j_.rows(); }
  const Matrix<T>& matrix() const { return j_; }
  Vec<T> apply(const Vec<T>& x) const { return j_ * x; }

  template <class U>
  BasicAlmostComplex<U> cast() const {
    return BasicAlmostComplex<U>(j_.template cast<U>());
  }

  bool operator==(const BasicAlmostComplex& o) const { return j_ == o.j_; }

 private:
  Matrix<T> j_;
};

using AlmostComplex = BasicAlmostComplex<Rational>;

/// First basis pair (0-based) with <J E_i, J E_j> != <E_i, E_j>, if any.
template <class T>
std::optional<std::array<std::size_t, 2>> compatibility_violation(const BasicMetric<T>& metric,
                                                                  const BasicAlmostComplex<T>& j) {
  const std::size_t n = metric.dim();
  if (j.dim() != n) throw DimensionError("J and metric dimensions differ");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const Vec<T> ea = basis_vector<T>(n, a), eb = basis_vector<T>(n, b);
      if (metric.inner(j.apply(ea), j.apply(eb)) != metric.inner(ea, eb)) return std::array<std::size_t, 2>{a, b};
    }
  return std::nullopt;
}

/// omega(x, y) = <J x, y>, as a matrix omega_ij = omega(E_i, E_j).
template <class T>
Matrix<T> kahler_form(const BasicMetric<T>& metric, const BasicAlmostComplex<T>& j) {
  const std::size_t n = metric.dim();
  Matrix<T> w(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) w(a, b) = metric.inner(j.apply(basis_vector<T>(n, a)), basis_vector<T>(n, b));
  return w;
}

template <class T>
T omega(const BasicMetric<T>& metric, const BasicAlmostComplex<T>& j, const Vec<T>& x, const Vec<T>& y) {
  return metric.inner(j.apply(x), y);
}

/// N_J(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY], no normalising prefactor.
template <class T>
Vec<T> nijenhuis(const BasicLieAlgebra<T>& alg, const BasicAlmostComplex<T>& j, const Vec<T>& x, const Vec<T>& y) {
  if (j.dim() != alg.dim()) throw DimensionError("nijenhuis: J and algebra dimensions differ");
  check_dim(alg, x, "nijenhuis");
  check_dim(alg, y, "nijenhuis");
  const Vec<T> jx = j.apply(x), jy = j.apply(y);
  Vec<T> out = bracket(alg, jx, jy) - bracket(alg, x, y);
  out = out - j.apply(bracket(alg, jx, y));
  out = out - j.apply(bracket(alg, x, jy));
  return out;
}

/// d omega(X,Y,Z) = 1/3 { -omega([X,Y],Z) + omega([X,Z],Y) - omega([Y,Z],X) }.
template <class T>
T d_omega(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric, const BasicAlmostComplex<T>& j, const Vec<T>& x,
          const Vec<T>& y, const Vec<T>& z) {
  T s = -omega(metric, j, bracket(alg, x, y), z);
  s += omega(metric, j, bracket(alg, x, z), y);
  s -= omega(metric, j, bracket(alg, y, z), x);
  return s / T(3);
}

/// (nabla_X J) Y = nabla_X (J Y) - J (nabla_X Y).
template <class T>
Vec<T> nabla_j(const BasicConnection<T>& c, const BasicAlmostComplex<T>& j, const Vec<T>& x, const Vec<T>& y) {
  return c.apply(x, j.apply(y)) - j.apply(c.apply(x, y));
}

struct IntegrabilityVerdict {
  bool integrable = true;
  std::optional<std::array<std::size_t, 2>> witness;
};

template <class T>
IntegrabilityVerdict is_integrable(const BasicLieAlgebra<T>& alg, const BasicAlmostComplex<T>& j) {
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!is_zero(nijenhuis(alg, j, basis_vector<T>(n, a), basis_vector<T>(n, b))))
        return {false, std::array<std::size_t, 2>{a, b}};
  return {};
}

struct KahlerVerdict {
  bool almost_kahler = true;
  std::optional<std::array<std::size_t, 3>> witness;
};

template <class T>
KahlerVerdict is_almost_kahler(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric,
                               const BasicAlmostComplex<T>& j) {
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        const T v = d_omega(alg, metric, j, basis_vector<T>(n, a), basis_vector<T>(n, b), basis_vector<T>(n, c));
        if (!scalar_is_zero(v)) return {false, std::array<std::size_t, 3>{a, b, c}};
      }
  return {};
}

/// Exact defects of a candidate isotropy generator D. All three vanish for a
/// derivation that is skew for the metric and commutes with J.
template <class T>
struct IsotropyDefects {
  T derivation{0};
  T metric_skew{0};
  std::optional<T> j_commutation;  // absent when the space carries no J

  bool all_zero() const {
    return scalar_is_zero(derivation) && scalar_is_zero(metric_skew) &&
           (!j_commutation || scalar_is_zero(*j_commutation));
  }
};

template <class T>
IsotropyDefects<T> isotropy_structure_check(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric,
                                            const BasicAlmostComplex<T>* j, const Matrix<T>& d) {
  IsotropyDefects<T> out;
  out.derivation = derivation_defect(alg, d).defect;
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec<T> ea = basis_vector<T>(n, a), eb = basis_vector<T>(n, b);
      const T v = metric.inner(d * ea, eb) + metric.inner(ea, d * eb);
      out.metric_skew = std::max<T>(out.metric_skew, scalar_abs(v));
    }
  if (j) out.j_commutation = max_norm(commutator(d, j->matrix()));
  return out;
}

}  // namespace hlgeo
