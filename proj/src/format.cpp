#include "hlgeo/format.hpp"

#include <cstdio>

namespace hlgeo {

std::string format_vector(const Vec<Rational>& v, const std::vector<std::string>& labels) {
  std::string out;
  auto term = [&](std::size_t k, bool first) {
    const Rational& c = v[k];
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += labels[k];
  };
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 0; k < v.size(); ++k) {
      const bool wanted = pass == 0 ? sgn(v[k]) > 0 : sgn(v[k]) < 0;
      if (wanted) term(k, out.empty());
    }
  return out.empty() ? "0" : out;
}

std::string format_indices(const std::vector<std::size_t>& idx, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += labels[idx[i]];
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace hlgeo
