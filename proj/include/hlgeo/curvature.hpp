#pragma once

#include <array>
#include <optional>

#include "hlgeo/metric.hpp"

namespace hlgeo {

/// Levi-Civita connection on left-invariant fields:
/// nabla_{E_i} E_j = sum_k gamma(i, j, k) E_k.
template <class T>
class BasicConnection {
 public:
  BasicConnection() = default;
  explicit BasicConnection(std::size_t n) : n_(n), gamma_(n * n * n, T(0)) {}

  std::size_t dim() const { return n_; }
  T& gamma(std::size_t i, std::size_t j, std::size_t k) { return gamma_[(i * n_ + j) * n_ + k]; }
  const T& gamma(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[(i * n_ + j) * n_ + k]; }

  Vec<T> basis(std::size_t i, std::size_t j) const {
    Vec<T> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = gamma(i, j, k);
    return out;
  }

  /// nabla_x y for constant-coefficient fields.
  Vec<T> apply(const Vec<T>& x, const Vec<T>& y) const {
    Vec<T> out(n_, T(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (scalar_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (scalar_is_zero(y[j])) continue;
        const T w = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) out[k] += w * gamma(i, j, k);
      }
    }
    return out;
  }

  bool operator==(const BasicConnection& o) const { return n_ == o.n_ && gamma_ == o.gamma_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> gamma_;
};

using Connection = BasicConnection<Rational>;

/// Connection in an orthonormal frame from the structure constants:
/// gamma_ijk = 1/2 (alpha_ijk - e_i e_k alpha_jki + e_j e_k alpha_kij).
template <class T>
BasicConnection<T> connection_orthonormal(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric) {
  if (metric.dim() != alg.dim()) throw DimensionError("connection: metric and algebra dimensions differ");
  if (!metric.signature()) throw UseGeneralFormError("metric is not diagonal +-1; use connection_general");
  const Vec<T>& e = *metric.signature();
  const std::size_t n = alg.dim();
  const T half = T(1) / T(2);
  BasicConnection<T> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c.gamma(i, j, k) =
            half * (alg.alpha(i, j, k) - e[i] * e[k] * alg.alpha(j, k, i) + e[j] * e[k] * alg.alpha(k, i, j));
  return c;
}

/// nabla_X Y = 1/2 ([X,Y] - ad*_X Y - ad*_Y X), valid for any nondegenerate metric.
template <class T>
BasicConnection<T> connection_general(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric) {
  if (metric.dim() != alg.dim()) throw DimensionError("connection: metric and algebra dimensions differ");
  const std::size_t n = alg.dim();
  std::vector<Vec<T>> star(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      star[i * n + j] = ad_star(alg, metric, basis_vector<T>(n, i), basis_vector<T>(n, j));
  const T half = T(1) / T(2);
  BasicConnection<T> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        c.gamma(i, j, k) = half * (alg.alpha(i, j, k) - star[i * n + j][k] - star[j * n + i][k]);
  return c;
}

/// max |gamma_ijk - gamma_jik - alpha_ijk|.
template <class T>
T torsion_defect(const BasicConnection<T>& c, const BasicLieAlgebra<T>& alg) {
  T m(0);
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        m = std::max<T>(m, scalar_abs(T(c.gamma(i, j, k) - c.gamma(j, i, k) - alg.alpha(i, j, k))));
  return m;
}

/// max |<nabla_i E_j, E_k> + <E_j, nabla_i E_k>|.
template <class T>
T metric_compatibility_defect(const BasicConnection<T>& c, const BasicMetric<T>& metric) {
  T m(0);
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const T v = metric.inner(c.basis(i, j), basis_vector<T>(n, k)) +
                    metric.inner(basis_vector<T>(n, j), c.basis(i, k));
        m = std::max<T>(m, scalar_abs(v));
      }
  return m;
}

/// R(E_i, E_j) E_k = sum_l r(i, j, k, l) E_l with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
template <class T>
class BasicCurvature {
 public:
  BasicCurvature() = default;
  explicit BasicCurvature(std::size_t n) : n_(n), r_(n * n * n * n, T(0)) {}

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return r_[((i * n_ + j) * n_ + k) * n_ + l]; }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return r_[((i * n_ + j) * n_ + k) * n_ + l];
  }

  Vec<T> basis(std::size_t i, std::size_t j, std::size_t k) const {
    Vec<T> out(n_);
    for (std::size_t l = 0; l < n_; ++l) out[l] = (*this)(i, j, k, l);
    return out;
  }

  Vec<T> apply(const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) const {
    Vec<T> out(n_, T(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (scalar_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (scalar_is_zero(y[j])) continue;
        for (std::size_t k = 0; k < n_; ++k) {
          if (scalar_is_zero(z[k])) continue;
          const T w = x[i] * y[j] * z[k];
          for (std::size_t l = 0; l < n_; ++l) out[l] += w * (*this)(i, j, k, l);
        }
      }
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(r_.begin(), r_.end(), [](const T& x) { return scalar_is_zero(x); });
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> r_;
};

using Curvature = BasicCurvature<Rational>;

template <class T>
BasicCurvature<T> riemann(const BasicConnection<T>& c, const BasicLieAlgebra<T>& alg) {
  const std::size_t n = alg.dim();
  BasicCurvature<T> r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          T s(0);
          for (std::size_t m = 0; m < n; ++m) {
            s += c.gamma(j, k, m) * c.gamma(i, m, l);
            s -= c.gamma(i, k, m) * c.gamma(j, m, l);
            s -= alg.alpha(i, j, m) * c.gamma(m, k, l);
          }
          r(i, j, k, l) = s;
        }
  return r;
}

/// (nabla_{E_a} R)(E_b, E_c) E_d = sum_l t(a, b, c, d, l) E_l. The first slot
/// is the direction of differentiation.
template <class T>
class BasicCurvatureDerivative {
 public:
  BasicCurvatureDerivative() = default;
  explicit BasicCurvatureDerivative(std::size_t n) : n_(n), t_(n * n * n * n * n, T(0)) {}

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t l) {
    return t_[(((a * n_ + b) * n_ + c) * n_ + d) * n_ + l];
  }
  const T& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t l) const {
    return t_[(((a * n_ + b) * n_ + c) * n_ + d) * n_ + l];
  }

  Vec<T> basis(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    Vec<T> out(n_);
    for (std::size_t l = 0; l < n_; ++l) out[l] = (*this)(a, b, c, d, l);
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> t_;
};

using CurvatureDerivative = BasicCurvatureDerivative<Rational>;

template <class T>
BasicCurvatureDerivative<T> covariant_derivative(const BasicConnection<T>& c, const BasicCurvature<T>& r) {
  const std::size_t n = c.dim();
  BasicCurvatureDerivative<T> t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t l = 0; l < n; ++l) {
            T s(0);
            for (std::size_t m = 0; m < n; ++m) {
              s += r(b, cc, d, m) * c.gamma(a, m, l);
              s -= c.gamma(a, b, m) * r(m, cc, d, l);
              s -= c.gamma(a, cc, m) * r(b, m, d, l);
              s -= c.gamma(a, d, m) * r(b, cc, m, l);
            }
            t(a, b, cc, d, l) = s;
          }
  return t;
}

/// (nabla_w R)(x, y) z for arbitrary vectors.
template <class T>
Vec<T> nabla_riemann(const BasicConnection<T>& c, const BasicCurvature<T>& r, const Vec<T>& w, const Vec<T>& x,
                     const Vec<T>& y, const Vec<T>& z) {
  const std::size_t n = c.dim();
  if (w.size() != n || x.size() != n || y.size() != n || z.size() != n)
    throw DimensionError("nabla_riemann: dimension mismatch");
  const Vec<T> nabla_w_of_r = c.apply(w, r.apply(x, y, z));
  Vec<T> out = nabla_w_of_r - r.apply(c.apply(w, x), y, z);
  out = out - r.apply(x, c.apply(w, y), z);
  out = out - r.apply(x, y, c.apply(w, z));
  return out;
}

/// <R(x,y)y, x> / (<x,x><y,y> - <x,y>^2).
template <class T>
T sectional_curvature(const BasicCurvature<T>& r, const BasicMetric<T>& metric, const Vec<T>& x, const Vec<T>& y) {
  const T xy = metric.inner(x, y);
  const T den = metric.inner(x, x) * metric.inner(y, y) - xy * xy;
  if (scalar_is_zero(den)) throw DegeneratePlaneError("plane spanned by x and y is degenerate");
  return metric.inner(r.apply(x, y, y), x) / den;
}

struct SymmetryVerdict {
  bool locally_symmetric = true;
  std::optional<std::array<std::size_t, 4>> witness;  // 0-based (a, b, c, d)
};

/// True iff nabla R vanishes on every basis 4-tuple.
template <class T>
SymmetryVerdict is_locally_symmetric(const BasicCurvatureDerivative<T>& t) {
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (!is_zero(t.basis(a, b, c, d))) return {false, std::array<std::size_t, 4>{a, b, c, d}};
  return {};
}

/// max |R(i,j,k,l) + R(j,i,k,l)| over the curvature table.
template <class T>
T curvature_antisymmetry_defect(const BasicCurvature<T>& r) {
  T m(0);
  const std::size_t n = r.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) m = std::max<T>(m, scalar_abs(T(r(i, j, k, l) + r(j, i, k, l))));
  return m;
}

/// max over basis triples of |R(X,Y)Z + R(Y,Z)X + R(Z,X)Y|.
template <class T>
T first_bianchi_defect(const BasicCurvature<T>& r) {
  T m(0);
  const std::size_t n = r.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          m = std::max<T>(m, scalar_abs(T(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l))));
  return m;
}

/// Lowered tensor R(i,j,k,l) = <R(E_i,E_j)E_k, E_l>: antisymmetry in (k,l)
/// and pair symmetry (ij) <-> (kl). Returns the larger of the two defects.
template <class T>
T lowered_symmetry_defect(const BasicCurvature<T>& r, const BasicMetric<T>& metric) {
  const std::size_t n = r.dim();
  std::vector<T> low(n * n * n * n, T(0));
  auto at = [n](std::size_t i, std::size_t j, std::size_t k, std::size_t l) { return ((i * n + j) * n + k) * n + l; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          T s(0);
          for (std::size_t m = 0; m < n; ++m) s += r(i, j, k, m) * metric.gram()(m, l);
          low[at(i, j, k, l)] = s;
        }
  T m(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          m = std::max<T>(m, scalar_abs(T(low[at(i, j, k, l)] + low[at(i, j, l, k)])));
          m = std::max<T>(m, scalar_abs(T(low[at(i, j, k, l)] - low[at(k, l, i, j)])));
        }
  return m;
}

/// max over basis tuples of the cyclic sum over (a,b,c) of (nabla_a R)(b,c)d.
template <class T>
T second_bianchi_defect(const BasicCurvatureDerivative<T>& t) {
  T m(0);
  const std::size_t n = t.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t l = 0; l < n; ++l)
            m = std::max<T>(m, scalar_abs(T(t(a, b, c, d, l) + t(b, c, a, d, l) + t(c, a, b, d, l))));
  return m;
}

}  // namespace hlgeo
