#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "hlgeo/errors.hpp"
#include "hlgeo/rational.hpp"

namespace hlgeo {

/// Coordinates of an algebra element in the declared basis E_1..E_n.
template <class T>
using Vec = std::vector<T>;

/// Small dense row-major matrix. Acts on column vectors: (M x)_r = sum_c M(r,c) x_c.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const Vec<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<T> column(std::size_t c) const {
    Vec<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vec<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> m(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(r, c) = static_cast<U>(ScalarTraits<T>::to_double((*this)(r, c)));
    return m;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix<T> m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (scalar_is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

template <class T>
Vec<T> operator*(const Matrix<T>& a, const Vec<T>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: dimensions differ");
  Vec<T> y(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shapes differ");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shapes differ");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class T>
Matrix<T> operator*(const T& s, Matrix<T> a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

template <class T>
Vec<T> zeros(std::size_t n) {
  return Vec<T>(n, T(0));
}

template <class T>
Vec<T> basis_vector(std::size_t n, std::size_t i) {
  Vec<T> v(n, T(0));
  v[i] = T(1);
  return v;
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class T>
Vec<T> scale(const T& s, Vec<T> a) {
  for (auto& x : a) x *= s;
  return a;
}

/// Adds s * b to a in place.
template <class T>
void axpy(const T& s, const Vec<T>& b, Vec<T>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

template <class T>
T max_norm(const Vec<T>& v) {
  T m(0);
  for (const auto& x : v) m = std::max<T>(m, scalar_abs(x));
  return m;
}

template <class T>
T max_norm(const Matrix<T>& a) {
  T m(0);
  for (const auto& x : a.data()) m = std::max<T>(m, scalar_abs(x));
  return m;
}

template <class T>
bool is_zero(const Vec<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return scalar_is_zero(x); });
}

template <class T>
bool is_zero(const Matrix<T>& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const T& x) { return scalar_is_zero(x); });
}

template <class T>
Vec<T> cast_vec(const Vec<Rational>& v) {
  Vec<T> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<T>(v[i].get_d());
  return out;
}

template <>
inline Vec<Rational> cast_vec<Rational>(const Vec<Rational>& v) {
  return v;
}

namespace detail {

/// Index of the pivot row for column c among rows r..n-1: first nonzero in the
/// exact case, largest magnitude otherwise.
template <class T>
std::optional<std::size_t> pick_pivot(const Matrix<T>& a, std::size_t r, std::size_t c) {
  std::optional<std::size_t> best;
  for (std::size_t i = r; i < a.rows(); ++i) {
    if (scalar_is_zero(a(i, c))) continue;
    if constexpr (ScalarTraits<T>::exact) {
      return i;
    } else {
      if (!best || scalar_abs(a(i, c)) > scalar_abs(a(*best, c))) best = i;
    }
  }
  return best;
}

}  // namespace detail

/// Determinant by Gaussian elimination.
template <class T>
T determinant(Matrix<T> a) {
  if (!a.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    auto p = detail::pick_pivot(a, c, c);
    if (!p) return T(0);
    if (*p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(*p, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (scalar_is_zero(a(i, c))) continue;
      const T f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Solves A X = B for square nonsingular A. Throws SingularOperatorError.
template <class T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b) {
  if (!a.square() || a.rows() != b.rows()) throw DimensionError("solve: incompatible shapes");
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    auto p = detail::pick_pivot(a, c, c);
    if (!p) throw SingularOperatorError("solve: singular matrix");
    if (*p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(*p, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(c, j), b(*p, j));
    }
    const T inv = T(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) a(c, j) *= inv;
    for (std::size_t j = 0; j < b.cols(); ++j) b(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || scalar_is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(c, j);
    }
  }
  return b;
}

template <class T>
Vec<T> solve(const Matrix<T>& a, const Vec<T>& b) {
  Matrix<T> rhs(b.size(), 1);
  rhs.set_column(0, b);
  return solve(a, rhs).column(0);
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

template <class T>
bool is_symmetric(const Matrix<T>& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

/// Pfaffian of an antisymmetric matrix of even order, by recursive expansion
/// along the first row. Only meant for the small orders used here.
template <class T>
T pfaffian(const Matrix<T>& a) {
  if (!a.square()) throw DimensionError("pfaffian of a non-square matrix");
  const std::size_t n = a.rows();
  if (n % 2 != 0) return T(0);
  if (n == 0) return T(1);
  T total(0);
  for (std::size_t j = 1; j < n; ++j) {
    if (scalar_is_zero(a(0, j))) continue;
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k < n; ++k)
      if (k != j) keep.push_back(k);
    Matrix<T> minor(n - 2, n - 2);
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < keep.size(); ++c) minor(r, c) = a(keep[r], keep[c]);
    const T term = a(0, j) * pfaffian(minor);
    if (j % 2 == 1) total += term;
    else total -= term;
  }
  return total;
}

}  // namespace hlgeo
