#include "hlgeo/rational.hpp"

#include "hlgeo/errors.hpp"

namespace hlgeo {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Rational q;
  try {
    q = Rational(std::string(text));
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  if (to_string(q) != text) {
    throw ParseError("non-canonical rational '" + std::string(text) + "' (expected '" + to_string(q) + "')");
  }
  return q;
}

}  // namespace hlgeo
