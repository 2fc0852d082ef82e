#pragma once

#include <optional>

#include "hlgeo/lie_algebra.hpp"

namespace hlgeo {

/// Nondegenerate symmetric bilinear form on the algebra, stored as its Gram
/// matrix in the algebra basis. When the Gram matrix is diag(+-1) the signs
/// are also exposed as signature().
template <class T>
class BasicMetric {
 public:
  BasicMetric() = default;

  explicit BasicMetric(Matrix<T> gram) : gram_(std::move(gram)) {
    if (!gram_.square()) throw DimensionError("Gram matrix must be square");
    if (!is_symmetric(gram_)) throw DegenerateMetricError("Gram matrix is not symmetric");
    try {
      gram_inv_ = inverse(gram_);
    } catch (const SingularOperatorError&) {
      throw DegenerateMetricError("Gram matrix is singular");
    }
    Vec<T> eps(gram_.rows());
    bool ortho = true;
    for (std::size_t i = 0; i < gram_.rows() && ortho; ++i)
      for (std::size_t j = 0; j < gram_.cols(); ++j) {
        const T& g = gram_(i, j);
        if (i == j) {
          if (g == T(1) || g == T(-1)) eps[i] = g;
          else ortho = false;
        } else if (!scalar_is_zero(g)) {
          ortho = false;
        }
      }
    if (ortho) eps_ = std::move(eps);
  }

  static BasicMetric from_signature(const Vec<T>& eps) {
    for (const auto& e : eps)
      if (!(e == T(1) || e == T(-1))) throw DegenerateMetricError("signature entries must be +1 or -1");
    return BasicMetric(Matrix<T>::diagonal(eps));
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix<T>& gram() const { return gram_; }
  const Matrix<T>& gram_inverse() const { return gram_inv_; }
  const std::optional<Vec<T>>& signature() const { return eps_; }

  T inner(const Vec<T>& x, const Vec<T>& y) const {
    if (x.size() != dim() || y.size() != dim()) throw DimensionError("inner product: dimension mismatch");
    T s(0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (scalar_is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
  }

  template <class U>
  BasicMetric<U> cast() const {
    return BasicMetric<U>(gram_.template cast<U>());
  }

  bool operator==(const BasicMetric& o) const { return gram_ == o.gram_; }

 private:
  Matrix<T> gram_;
  Matrix<T> gram_inv_;
  std::optional<Vec<T>> eps_;
};

using Metric = BasicMetric<Rational>;

/// Metric adjoint of ad_x applied to y: the unique z with <z, w> = <y, [x, w]>
/// for all w, i.e. G z = ad_x^T G y.
template <class T>
Vec<T> ad_star(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric, const Vec<T>& x, const Vec<T>& y) {
  check_dim(alg, x, "ad_star");
  check_dim(alg, y, "ad_star");
  if (metric.dim() != alg.dim()) throw DimensionError("ad_star: metric and algebra dimensions differ");
  const Vec<T> rhs = ad_matrix(alg, x).transpose() * (metric.gram() * y);
  return metric.gram_inverse() * rhs;
}

}  // namespace hlgeo
