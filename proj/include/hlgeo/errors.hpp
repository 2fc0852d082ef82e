#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hlgeo {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DegenerateMetricError : public Error {
 public:
  using Error::Error;
};

/// Raised when the orthonormal-frame connection formula is asked to handle a
/// metric that is not diag(+-1).
class UseGeneralFormError : public Error {
 public:
  using Error::Error;
};

class DegeneratePlaneError : public Error {
 public:
  using Error::Error;
};

class SingularOperatorError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class UnknownAlgebraError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. Line and column are 1-based; zero when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A structural invariant (Jacobi, J^2 = -1, compatibility, ...) does not hold.
/// The witness holds the 1-based basis indices where it fails.
class ValidityError : public Error {
 public:
  ValidityError(std::string invariant, std::vector<std::size_t> witness, const std::string& what)
      : Error(what), invariant_(std::move(invariant)), witness_(std::move(witness)) {}

  const std::string& invariant() const { return invariant_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::string invariant_;
  std::vector<std::size_t> witness_;
};

}  // namespace hlgeo
