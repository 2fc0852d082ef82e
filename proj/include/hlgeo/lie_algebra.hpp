#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hlgeo/linalg.hpp"

namespace hlgeo {

/// A real Lie algebra given by structure constants in a fixed basis:
/// [E_i, E_j] = sum_k alpha(i, j, k) E_k. Indices are 0-based in code and
/// 1-based in every user-facing string.
///
/// Only brackets with i < j are supplied; the dense table is filled by
/// antisymmetry, so inconsistent duplicates cannot be represented.
template <class T>
class BasicLieAlgebra {
 public:
  struct Bracket {
    std::size_t i;
    std::size_t j;
    Vec<T> coeffs;
  };

  BasicLieAlgebra() = default;

  BasicLieAlgebra(std::vector<std::string> labels, const std::vector<Bracket>& brackets)
      : labels_(std::move(labels)), alpha_(labels_.size() * labels_.size() * labels_.size(), T(0)) {
    const std::size_t n = dim();
    if (n == 0) throw DimensionError("Lie algebra must have positive dimension");
    std::vector<bool> seen(n * n, false);
    for (const auto& b : brackets) {
      if (b.i >= n || b.j >= n) throw DimensionError("bracket index out of range");
      if (b.i >= b.j) throw DimensionError("bracket entries must satisfy i < j");
      if (b.coeffs.size() != n) throw DimensionError("bracket coefficient vector has wrong length");
      if (seen[b.i * n + b.j]) throw DimensionError("duplicate bracket entry");
      seen[b.i * n + b.j] = true;
      for (std::size_t k = 0; k < n; ++k) {
        at(b.i, b.j, k) = b.coeffs[k];
        at(b.j, b.i, k) = -b.coeffs[k];
      }
    }
  }

  /// The abelian algebra of dimension n with labels E1..En.
  static BasicLieAlgebra abelian(std::size_t n) { return BasicLieAlgebra(default_labels(n), {}); }

  static std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("E" + std::to_string(i + 1));
    return out;
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  const T& alpha(std::size_t i, std::size_t j, std::size_t k) const { return alpha_[(i * dim() + j) * dim() + k]; }

  /// [E_i, E_j] as a coordinate vector.
  Vec<T> basis_bracket(std::size_t i, std::size_t j) const {
    Vec<T> out(dim());
    for (std::size_t k = 0; k < dim(); ++k) out[k] = alpha(i, j, k);
    return out;
  }

  /// Nonzero brackets with i < j in lexicographic order.
  std::vector<Bracket> brackets() const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j) {
        Vec<T> c = basis_bracket(i, j);
        if (!is_zero(c)) out.push_back({i, j, std::move(c)});
      }
    return out;
  }

  template <class U>
  BasicLieAlgebra<U> cast() const {
    std::vector<typename BasicLieAlgebra<U>::Bracket> bs;
    for (const auto& b : brackets()) bs.push_back({b.i, b.j, cast_vec<U>(b.coeffs)});
    return BasicLieAlgebra<U>(labels_, bs);
  }

  bool operator==(const BasicLieAlgebra& o) const { return labels_ == o.labels_ && alpha_ == o.alpha_; }

 private:
  T& at(std::size_t i, std::size_t j, std::size_t k) { return alpha_[(i * dim() + j) * dim() + k]; }

  std::vector<std::string> labels_;
  std::vector<T> alpha_;
};

using LieAlgebra = BasicLieAlgebra<Rational>;

template <class T>
void check_dim(const BasicLieAlgebra<T>& alg, const Vec<T>& x, const char* what) {
  if (x.size() != alg.dim()) {
    throw DimensionError(std::string(what) + ": vector of length " + std::to_string(x.size()) +
                         " for algebra of dimension " + std::to_string(alg.dim()));
  }
}

/// sum_{i<j} (x_i y_j - x_j y_i) [E_i, E_j]; antisymmetric term by term, so
/// bracket(x, x) is exactly zero in floating point as well.
template <class T>
Vec<T> bracket(const BasicLieAlgebra<T>& alg, const Vec<T>& x, const Vec<T>& y) {
  check_dim(alg, x, "bracket");
  check_dim(alg, y, "bracket");
  const std::size_t n = alg.dim();
  Vec<T> out(n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const T w = x[i] * y[j] - x[j] * y[i];
      if (scalar_is_zero(w)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const T& a = alg.alpha(i, j, k);
        if (!scalar_is_zero(a)) out[k] += w * a;
      }
    }
  return out;
}

/// Largest violation of the Jacobi identity together with the first basis
/// triple (0-based, i < j < k) where it is attained.
template <class T>
struct JacobiReport {
  T defect{0};
  std::optional<std::array<std::size_t, 3>> witness;
};

template <class T>
JacobiReport<T> jacobi_defect(const BasicLieAlgebra<T>& alg) {
  JacobiReport<T> r;
  const std::size_t n = alg.dim();
  // The cyclic sum is totally antisymmetric, so i < j < k covers every triple.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec<T> ei = basis_vector<T>(n, i), ej = basis_vector<T>(n, j), ek = basis_vector<T>(n, k);
        Vec<T> s = bracket(alg, alg.basis_bracket(i, j), ek);
        s = s + bracket(alg, alg.basis_bracket(j, k), ei);
        s = s + bracket(alg, alg.basis_bracket(k, i), ej);
        const T m = max_norm(s);
        if (m > r.defect) {
          r.defect = m;
          r.witness = std::array<std::size_t, 3>{i, j, k};
        }
      }
  return r;
}

/// Matrix of y -> [x, y].
template <class T>
Matrix<T> ad_matrix(const BasicLieAlgebra<T>& alg, const Vec<T>& x) {
  check_dim(alg, x, "ad_matrix");
  const std::size_t n = alg.dim();
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (scalar_is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) += x[i] * alg.alpha(i, j, k);
  }
  return m;
}

/// K_ij = trace(ad_{E_i} ad_{E_j}).
template <class T>
Matrix<T> killing_form(const BasicLieAlgebra<T>& alg) {
  const std::size_t n = alg.dim();
  std::vector<Matrix<T>> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(alg, basis_vector<T>(n, i)));
  Matrix<T> k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      T tr(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) tr += ads[i](a, b) * ads[j](b, a);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

template <class T>
bool is_semisimple(const BasicLieAlgebra<T>& alg) {
  return !scalar_is_zero(determinant(killing_form(alg)));
}

/// Maximal defect of D as a derivation and the first basis pair (0-based)
/// attaining it.
template <class T>
struct DerivationReport {
  T defect{0};
  std::optional<std::array<std::size_t, 2>> witness;
};

/// max over i < j of |D[E_i,E_j] - [D E_i, E_j] - [E_i, D E_j]|_inf.
template <class T>
DerivationReport<T> derivation_defect(const BasicLieAlgebra<T>& alg, const Matrix<T>& d) {
  const std::size_t n = alg.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionError("derivation candidate has wrong shape");
  DerivationReport<T> r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec<T> ei = basis_vector<T>(n, i), ej = basis_vector<T>(n, j);
      Vec<T> v = d * alg.basis_bracket(i, j);
      v = v - bracket(alg, d * ei, ej);
      v = v - bracket(alg, ei, d * ej);
      const T m = max_norm(v);
      if (m > r.defect) {
        r.defect = m;
        r.witness = std::array<std::size_t, 2>{i, j};
      }
    }
  return r;
}

/// Matrix commutator AB - BA.
template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

}  // namespace hlgeo
