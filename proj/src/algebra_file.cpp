#include "hlgeo/algebra_file.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hlgeo {

using nlohmann::json;
using Q = Rational;

namespace {

struct Position {
  std::size_t line = 0, column = 0;
};

Position position_of_byte(const std::string& text, std::size_t byte) {
  Position p{1, 1};
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

/// Error reporter that points at the first occurrence of a key in the source.
class Source {
 public:
  explicit Source(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const std::size_t at = key.empty() ? std::string::npos : text_.find("\"" + key + "\"");
    const Position p = at == std::string::npos ? Position{1, 1} : position_of_byte(text_, at + 1);
    throw ParseError(what, p.line, p.column);
  }

 private:
  const std::string& text_;
};

Q rational(const Source& src, const std::string& key, const json& v) {
  if (!v.is_string()) src.fail(key, "'" + key + "': rational values must be strings such as \"1\" or \"-2/3\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    src.fail(key, "'" + key + "': " + e.what());
  }
}

std::size_t index(const Source& src, const std::string& key, const json& v, std::size_t n) {
  if (!v.is_number_integer()) src.fail(key, "'" + key + "' must be an integer");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > n)
    src.fail(key, "'" + key + "' = " + std::to_string(i) + " is outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(i - 1);
}

Matrix<Q> matrix(const Source& src, const std::string& key, const json& v, std::size_t n) {
  if (!v.is_array() || v.size() != n) src.fail(key, "'" + key + "' must be a " + std::to_string(n) + "x" +
                                                         std::to_string(n) + " array of rational strings");
  Matrix<Q> m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!v[r].is_array() || v[r].size() != n)
      src.fail(key, "'" + key + "' row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rational(src, key, v[r][c]);
  }
  return m;
}

json matrix_json(const Matrix<Q>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

HomogeneousSpace parse_algebra(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const Position p = position_of_byte(text, e.byte);
    throw ParseError(std::string("malformed JSON: ") + e.what(), p.line, p.column);
  }
  const Source src(text);
  if (!doc.is_object()) src.fail("", "algebra file must be a JSON object");

  static const std::set<std::string> kKeys = {"dim", "basis", "signature", "gram", "brackets", "J", "isotropy"};
  for (const auto& [k, _] : doc.items())
    if (!kKeys.count(k)) src.fail(k, "unknown key '" + k + "'");
  for (const char* k : {"dim", "basis", "brackets"})
    if (!doc.contains(k)) src.fail("", std::string("missing required key '") + k + "'");
  if (doc.contains("signature") == doc.contains("gram"))
    src.fail(doc.contains("gram") ? "gram" : "", "exactly one of 'signature' and 'gram' must be present");

  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
    src.fail("dim", "'dim' must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["dim"].get<long long>());

  const json& jb = doc["basis"];
  if (!jb.is_array() || jb.size() != n) src.fail("basis", "'basis' must list " + std::to_string(n) + " labels");
  std::vector<std::string> labels;
  for (const auto& l : jb) {
    if (!l.is_string() || l.get<std::string>().empty()) src.fail("basis", "basis labels must be nonempty strings");
    labels.push_back(l.get<std::string>());
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
    src.fail("basis", "basis labels must be distinct");

  const json& jbr = doc["brackets"];
  if (!jbr.is_array()) src.fail("brackets", "'brackets' must be an array");
  std::vector<LieAlgebra::Bracket> brackets;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : jbr) {
    if (!e.is_object()) src.fail("brackets", "each bracket must be an object {i, j, coeffs}");
    for (const auto& [k, _] : e.items())
      if (k != "i" && k != "j" && k != "coeffs") src.fail(k, "unknown bracket key '" + k + "'");
    if (!e.contains("i") || !e.contains("j") || !e.contains("coeffs"))
      src.fail("brackets", "each bracket needs 'i', 'j' and 'coeffs'");
    const std::size_t i = index(src, "i", e["i"], n);
    const std::size_t j = index(src, "j", e["j"], n);
    if (i >= j)
      src.fail("brackets", "bracket (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") must have i < j");
    if (!seen.insert({i, j}).second)
      src.fail("brackets",
               "duplicate bracket entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (!e["coeffs"].is_object()) src.fail("coeffs", "'coeffs' must be an object mapping 1-based k to rationals");
    Vec<Q> c(n, Q(0));
    for (const auto& [k, v] : e["coeffs"].items()) {
      std::size_t pos = 0;
      long long kk = 0;
      try {
        kk = std::stoll(k, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != k.size() || kk < 1 || static_cast<std::size_t>(kk) > n || std::to_string(kk) != k)
        src.fail("coeffs", "coefficient key '" + k + "' must be an index in 1.." + std::to_string(n));
      c[static_cast<std::size_t>(kk - 1)] = rational(src, "coeffs", v);
    }
    brackets.push_back({i, j, std::move(c)});
  }

  HomogeneousSpace s;
  s.name = name;
  s.alg = LieAlgebra(labels, brackets);

  if (doc.contains("signature")) {
    const json& js = doc["signature"];
    if (!js.is_array() || js.size() != n)
      src.fail("signature", "'signature' must list " + std::to_string(n) + " entries");
    Vec<Q> eps;
    for (const auto& e : js) {
      if (!e.is_number_integer() || (e.get<long long>() != 1 && e.get<long long>() != -1))
        src.fail("signature", "signature entries must be 1 or -1");
      eps.emplace_back(static_cast<long>(e.get<long long>()));
    }
    s.metric = Metric::from_signature(eps);
  } else {
    s.metric = Metric(matrix(src, "gram", doc["gram"], n));
  }

  if (doc.contains("J")) s.acs = AlmostComplex(matrix(src, "J", doc["J"], n));

  if (doc.contains("isotropy")) {
    const json& ji = doc["isotropy"];
    if (!ji.is_array()) src.fail("isotropy", "'isotropy' must be an array of matrices");
    for (const auto& m : ji) s.isotropy.push_back(matrix(src, "isotropy", m, n));
  }
  return s;
}

HomogeneousSpace load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnknownAlgebraError("cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str(), std::filesystem::path(path).stem().string());
}

std::string serialize_algebra(const HomogeneousSpace& s) {
  const std::size_t n = s.alg.dim();
  json doc;
  doc["dim"] = n;
  doc["basis"] = s.alg.labels();
  if (const auto& eps = s.metric.signature()) {
    json sig = json::array();
    for (const auto& e : *eps) sig.push_back(sgn(e));
    doc["signature"] = sig;
  } else {
    doc["gram"] = matrix_json(s.metric.gram());
  }
  json brackets = json::array();
  for (const auto& b : s.alg.brackets()) {
    json coeffs = json::object();
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(b.coeffs[k]) != 0) coeffs[std::to_string(k + 1)] = to_string(b.coeffs[k]);
    brackets.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"coeffs", coeffs}});
  }
  doc["brackets"] = brackets;
  if (s.acs) doc["J"] = matrix_json(s.acs->matrix());
  if (!s.isotropy.empty()) {
    json iso = json::array();
    for (const auto& d : s.isotropy) iso.push_back(matrix_json(d));
    doc["isotropy"] = iso;
  }
  return doc.dump(2) + "\n";
}

HomogeneousSpace resolve_algebra(const std::string& name_or_path) {
  if (catalog::contains(name_or_path)) return catalog::build(name_or_path);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(name_or_path, ec))
    throw UnknownAlgebraError("unknown algebra '" + name_or_path + "' (not a catalog name or a readable file)");
  HomogeneousSpace s = load_algebra_file(name_or_path);
  validate(s);
  return s;
}

}  // namespace hlgeo
