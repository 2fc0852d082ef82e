#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace hlgeo {

/// Arbitrary-precision rational; gmp keeps it in lowest terms with a positive
/// denominator as long as every value is produced by arithmetic or canonicalized.
using Rational = mpq_class;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q". Only the canonical spelling is accepted ("2/4", "+1",
/// "-0", "3/1" are rejected) so that parse and to_string are inverse.
Rational parse_rational(std::string_view text);

/// Scalar traits shared by the exact and floating-point code paths.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational abs(const Rational& x) { return ::abs(x); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double abs(double x) { return std::fabs(x); }
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
};

template <class T>
T scalar_abs(const T& x) {
  return ScalarTraits<T>::abs(x);
}

template <class T>
bool scalar_is_zero(const T& x) {
  return ScalarTraits<T>::is_zero(x);
}

}  // namespace hlgeo
