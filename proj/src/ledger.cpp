#include "hlgeo/ledger.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hlgeo/format.hpp"

namespace hlgeo {

std::string to_string(LedgerStatus s) {
  switch (s) {
    case LedgerStatus::exact_match: return "exact_match";
    case LedgerStatus::paper_typo_suspected: return "paper_typo_suspected";
    case LedgerStatus::convention_dependent: return "convention_dependent";
  }
  return "unknown";
}

std::size_t DiscrepancyLedger::mismatches() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const LedgerEntry& e) {
    return e.status != LedgerStatus::exact_match;
  }));
}

bool DiscrepancyLedger::complete() const {
  std::set<std::string> have;
  for (const auto& e : entries) {
    if (e.engine.empty()) return false;
    have.insert(e.location + "|" + e.quantity);
  }
  return std::all_of(printed_quantities.begin(), printed_quantities.end(),
                     [&](const std::string& q) { return have.count(q) > 0; });
}

namespace {

using Q = Rational;
/// Sparse 1-based coordinates as printed, e.g. {{6, 2}, {3, -2}} for 2E6 - 2E3.
using Sparse = std::vector<std::pair<std::size_t, Q>>;

struct PrintedPair {
  std::size_t i, j;  // 1-based
  Sparse value;
};
struct PrintedTriple {
  std::size_t i, j, k;
  Q value;
};
struct PrintedQuad {
  std::size_t a, b, c, d;
  Sparse value;
};
struct PrintedVerdict {
  std::string quantity;
  bool value;
};

/// Values published alongside one of the four constructions.
struct PrintedTables {
  std::string section;
  std::vector<PrintedPair> brackets;  // all other i < j brackets printed as zero
  std::vector<PrintedPair> connection;  // all other i <= j entries printed as zero
  bool standard_j = true;
  std::vector<PrintedPair> nijenhuis;
  std::vector<PrintedTriple> d_omega;
  std::vector<PrintedPair> nabla_j;
  std::vector<PrintedQuad> nabla_r;
  std::vector<PrintedVerdict> verdicts;
  std::map<std::string, std::string> notes;  // quantity -> note for known mismatches
};

const std::map<std::string, PrintedTables>& printed_tables() {
  static const std::map<std::string, PrintedTables> kTables = {
      {"sl2_x_sl2",
       {"§6.1",
        {{1, 2, {{3, 2}}}, {1, 3, {{2, 2}}}, {2, 3, {{1, -2}}}, {4, 5, {{6, 2}}}, {4, 6, {{6, 2}}}, {5, 6, {{4, -2}}}},
        {{1, 2, {{3, 1}}}, {1, 3, {{2, 1}}}, {2, 3, {{1, -1}}}, {4, 5, {{6, 1}}}, {4, 6, {{5, 1}}}, {5, 6, {{4, -1}}}},
        true,
        {{1, 2, {{6, 2}, {3, -2}}}},
        {{1, 2, 6, Q(2, 3)}},
        {},
        {},
        {{"integrable", false}, {"almost_kahler", false}, {"locally_symmetric", true}},
        {{"[E4,E6]",
          "direct sum of two sl(2,R) copies forces 2*E5; the printed connection entry nabla_E4 E6 = E5 "
          "is consistent with 2*E5"}}}},
      {"sl2_c",
       {"§6.2",
        {{1, 2, {{3, 2}}},
         {1, 3, {{2, 2}}},
         {2, 3, {{1, -2}}},
         {4, 5, {{3, -2}}},
         {4, 6, {{2, -2}}},
         {5, 6, {{1, 2}}},
         {1, 5, {{6, 2}}},
         {1, 6, {{5, 2}}},
         {2, 4, {{6, -2}}},
         {2, 6, {{4, -2}}},
         {3, 4, {{5, -2}}},
         {3, 5, {{4, 2}}}},
        {{1, 2, {{3, 1}}},
         {1, 3, {{2, 1}}},
         {2, 3, {{1, -1}}},
         {4, 6, {{2, -1}}},
         {5, 6, {{2, -1}}},
         {1, 5, {{6, 3}}},
         {1, 6, {{5, 3}}},
         {2, 4, {{6, -3}}},
         {2, 6, {{4, -3}}},
         {3, 4, {{5, -3}}},
         {3, 5, {{4, -3}}},
         {4, 5, {{3, -1}}}},
        true,
        {},
        {{1, 2, 6, Q(-2, 3)}},
        {},
        {{1, 2, 5, 6, {{2, 6}}}},
        {{"integrable", true}, {"almost_kahler", false}, {"locally_symmetric", false}},
        {{"nabla_E5 E6",
          "printed value duplicates nabla_E4 E6; -E2 violates metric compatibility "
          "(<nabla_E5 E6, E2> + <E6, nabla_E5 E2> != 0)"},
         {"nabla_E3 E5",
          "sign: torsion-freeness with [E3,E5] = 2*E4 and the printed nabla_E5 E3 = E4 force +3*E4"}}}},
      {"sl2_semidirect_r3",
       {"§6.3",
        {{1, 2, {{3, 2}}},
         {1, 3, {{2, 2}}},
         {2, 3, {{1, -2}}},
         {1, 5, {{6, 2}}},
         {1, 6, {{5, 2}}},
         {2, 4, {{6, -2}}},
         {2, 6, {{4, -2}}},
         {3, 4, {{5, -2}}},
         {3, 5, {{4, 2}}}},
        {{1, 2, {{3, 1}}},
         {1, 3, {{2, 1}}},
         {1, 5, {{6, 2}}},
         {1, 6, {{5, 2}}},
         {2, 3, {{1, -1}}},
         {2, 4, {{6, -2}}},
         {2, 6, {{4, -2}}},
         {3, 4, {{5, -2}}},
         {3, 5, {{4, 2}}}},
        true,
        {{1, 2, {{3, 2}}}},
        {{2, 3, 4, Q(-2, 3)}},
        {{1, 2, {{6, 1}}}},
        {},
        {{"integrable", false}, {"almost_kahler", false}, {"locally_symmetric", true}},
        {}}},
      {"n_sl2",
       {"§6.4",
        {{1, 2, {{6, 2}}}, {1, 3, {{5, 2}}}, {2, 3, {{4, -2}}}},
        {{1, 2, {{6, 1}}},
         {1, 3, {{5, 1}}},
         {1, 5, {{3, 1}}},
         {1, 6, {{2, 1}}},
         {2, 3, {{4, -1}}},
         {2, 4, {{3, -1}}},
         {2, 6, {{1, -1}}},
         {3, 4, {{2, -1}}},
         {3, 5, {{1, 1}}}},
        true,
        {{1, 2, {{6, -1}}}},
        {{1, 2, 3, Q(-2)}},
        {},
        {{1, 2, 3, 6, {{3, 1}}}},
        {{"integrable", false}, {"almost_kahler", false}, {"locally_symmetric", false}},
        {{"N_J(E1,E2)",
          "factor 2: the unnormalised N_J used for every other printed value gives -2*E6; a 1/2-normalised "
          "tensor would give the printed -E6"}}}},
  };
  return kTables;
}

Vec<Q> dense(const Sparse& s, std::size_t n) {
  Vec<Q> v(n, Q(0));
  for (const auto& [k, c] : s) v.at(k - 1) = c;
  return v;
}

Vec<Q> e(std::size_t n, std::size_t one_based) { return basis_vector<Q>(n, one_based - 1); }

class Builder {
 public:
  Builder(DiscrepancyLedger& out, const PrintedTables& t, const std::vector<std::string>& labels)
      : out_(out), t_(t), labels_(labels) {}

  void vector_value(const std::string& table, const std::string& quantity, const Vec<Q>& printed,
                    const Vec<Q>& engine, bool printed_explicitly = true) {
    const std::string loc = t_.section + " " + table;
    if (printed_explicitly) out_.printed_quantities.push_back(loc + "|" + quantity);
    const bool same = printed == engine;
    if (same && !printed_explicitly) return;
    add(loc, quantity, format_vector(printed, labels_), format_vector(engine, labels_),
        same ? LedgerStatus::exact_match : LedgerStatus::paper_typo_suspected,
        printed_explicitly ? "" : "printed as zero (\"all others are zero\")");
  }

  void scalar_value(const std::string& table, const std::string& quantity, const Q& printed, const Q& engine) {
    const std::string loc = t_.section + " " + table;
    out_.printed_quantities.push_back(loc + "|" + quantity);
    add(loc, quantity, to_string(printed), to_string(engine),
        printed == engine ? LedgerStatus::exact_match : LedgerStatus::paper_typo_suspected, "");
  }

  void verdict(const std::string& quantity, bool printed, bool engine, const std::string& note = "") {
    const std::string loc = t_.section + " verdicts";
    out_.printed_quantities.push_back(loc + "|" + quantity);
    add(loc, quantity, printed ? "true" : "false", engine ? "true" : "false",
        printed == engine ? LedgerStatus::exact_match : LedgerStatus::paper_typo_suspected, note);
  }

  void add(std::string loc, std::string quantity, std::string printed, std::string engine, LedgerStatus status,
           std::string note) {
    if (status != LedgerStatus::exact_match) {
      auto it = t_.notes.find(quantity);
      if (it != t_.notes.end()) note = note.empty() ? it->second : note + "; " + it->second;
    }
    out_.entries.push_back(
        {std::move(loc), std::move(quantity), std::move(printed), std::move(engine), status, std::move(note)});
  }

 private:
  DiscrepancyLedger& out_;
  const PrintedTables& t_;
  const std::vector<std::string>& labels_;
};

std::string pair_label(const std::vector<std::string>& labels, std::size_t i, std::size_t j) {
  return labels[i - 1] + "," + labels[j - 1];
}

void sl2r_ledger(const HomogeneousSpace& s, DiscrepancyLedger& out) {
  const auto& labels = s.alg.labels();
  const std::string sec = "§6";
  auto add = [&](const std::string& table, const std::string& quantity, std::string printed, std::string engine,
                 bool same, LedgerStatus miss, std::string note) {
    out.printed_quantities.push_back(sec + " " + table + "|" + quantity);
    out.entries.push_back({sec + " " + table, quantity, std::move(printed), std::move(engine),
                           same ? LedgerStatus::exact_match : miss, same ? "" : std::move(note)});
  };
  const std::vector<PrintedPair> brackets = {{1, 2, {{3, 2}}}, {1, 3, {{2, 2}}}, {2, 3, {{1, -2}}}};
  for (const auto& b : brackets) {
    const Vec<Q> printed = dense(b.value, 3);
    const Vec<Q> engine = s.alg.basis_bracket(b.i - 1, b.j - 1);
    add("sl(2,R) brackets", "[" + pair_label(labels, b.i, b.j) + "]", format_vector(printed, labels),
        format_vector(engine, labels), printed == engine, LedgerStatus::paper_typo_suspected, "");
  }
  const Matrix<Q> printed_gram = Matrix<Q>::diagonal({Q(1), Q(1), Q(-1)});
  add("trace form", "<X_i,X_j> = 1/2 trace(X_i X_j)", "diag(1,1,-1)",
      s.metric.gram() == printed_gram ? "diag(1,1,-1)" : "differs", s.metric.gram() == printed_gram,
      LedgerStatus::paper_typo_suspected, "");

  const Matrix<Q> k = killing_form(s.alg);
  const bool proportional = k == Q(8) * s.metric.gram();
  add("trace form", "Killing form coincides with <,>", "K = <,>",
      proportional ? "K = 8 <,>" : "K not proportional to <,>", k == s.metric.gram(),
      LedgerStatus::convention_dependent,
      "trace(ad ad) is 8 times the trace form; equal up to the normalisation of the Killing form");

  const Connection c = connection_general(s.alg, s.metric);
  bool half_bracket = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (c.basis(i, j) != scale(Q(1, 2), s.alg.basis_bracket(i, j))) half_bracket = false;
  add("bi-invariant connection", "nabla_X Y = 1/2 [X,Y]", "true", half_bracket ? "true" : "false", half_bracket,
      LedgerStatus::paper_typo_suspected, "");

  const Curvature r = riemann(c, s.alg);
  bool minus_one = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (sectional_curvature(r, s.metric, e(3, i + 1), e(3, j + 1)) != Q(-1)) minus_one = false;
  add("constant curvature", "sectional curvature on coordinate planes", "-1", minus_one ? "-1" : "not -1", minus_one,
      LedgerStatus::paper_typo_suspected, "");
}

}  // namespace

DiscrepancyLedger ledger(const HomogeneousSpace& s) {
  DiscrepancyLedger out;
  out.algebra = s.name;
  if (s.name == "sl2r_biinvariant") {
    sl2r_ledger(s, out);
    return out;
  }
  const auto& tables = printed_tables();
  const auto it = tables.find(s.name);
  if (it == tables.end()) return out;
  const PrintedTables& t = it->second;
  const std::size_t n = s.alg.dim();
  const auto& labels = s.alg.labels();
  Builder b(out, t, labels);

  // Brackets: every printed entry, plus any engine bracket the table prints as zero.
  {
    std::map<std::pair<std::size_t, std::size_t>, Vec<Q>> printed;
    for (const auto& p : t.brackets) printed[{p.i, p.j}] = dense(p.value, n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const auto f = printed.find({i, j});
        const bool explicit_entry = f != printed.end();
        b.vector_value("brackets", "[" + pair_label(labels, i, j) + "]",
                       explicit_entry ? f->second : zeros<Q>(n), s.alg.basis_bracket(i - 1, j - 1), explicit_entry);
      }
  }

  if (t.standard_j && s.acs) {
    const bool same = *s.acs == AlmostComplex::standard(n);
    out.printed_quantities.push_back(t.section + " almost complex structure|J");
    b.add(t.section + " almost complex structure", "J", "E_i -> E_{i+3}, E_{i+3} -> -E_i",
          same ? "E_i -> E_{i+3}, E_{i+3} -> -E_i" : "differs", same ? LedgerStatus::exact_match
                                                                 : LedgerStatus::paper_typo_suspected,
          "");
  }

  const Connection conn = connection_orthonormal(s.alg, s.metric);
  {
    std::map<std::pair<std::size_t, std::size_t>, Vec<Q>> printed;
    for (const auto& p : t.connection) printed[{p.i, p.j}] = dense(p.value, n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i; j <= n; ++j) {
        const auto f = printed.find({i, j});
        const bool explicit_entry = f != printed.end();
        b.vector_value("connection", "nabla_" + labels[i - 1] + " " + labels[j - 1],
                       explicit_entry ? f->second : zeros<Q>(n), conn.basis(i - 1, j - 1), explicit_entry);
      }
  }

  if (s.acs) {
    const AlmostComplex& j = *s.acs;
    for (const auto& p : t.nijenhuis)
      b.vector_value("Nijenhuis tensor", "N_J(" + pair_label(labels, p.i, p.j) + ")", dense(p.value, n),
                     nijenhuis(s.alg, j, e(n, p.i), e(n, p.j)));
    for (const auto& p : t.d_omega)
      b.scalar_value("d omega", "d_omega(" + labels[p.i - 1] + "," + labels[p.j - 1] + "," + labels[p.k - 1] + ")",
                     p.value, d_omega(s.alg, s.metric, j, e(n, p.i), e(n, p.j), e(n, p.k)));
    for (const auto& p : t.nabla_j)
      b.vector_value("nabla J", "(nabla_" + labels[p.i - 1] + " J)" + labels[p.j - 1], dense(p.value, n),
                     nabla_j(conn, j, e(n, p.i), e(n, p.j)));
  }

  const Curvature r = riemann(conn, s.alg);
  const CurvatureDerivative dr = covariant_derivative(conn, r);

  for (const auto& p : t.nabla_r) {
    const std::array<std::size_t, 4> args = {p.a - 1, p.b - 1, p.c - 1, p.d - 1};
    const Vec<Q> printed = dense(p.value, n);
    const Vec<Q> engine = dr.basis(args[0], args[1], args[2], args[3]);
    const std::string quantity =
        "nabla R(" + labels[args[0]] + "," + labels[args[1]] + "," + labels[args[2]] + "," + labels[args[3]] + ")";
    const std::string loc = t.section + " curvature remark";
    out.printed_quantities.push_back(loc + "|" + quantity);
    if (printed == engine) {
      b.add(loc, quantity, format_vector(printed, labels), format_vector(engine, labels), LedgerStatus::exact_match,
            "");
      continue;
    }
    // Search every slot order and both curvature sign conventions.
    std::vector<std::string> matches;
    std::array<std::size_t, 4> perm = {0, 1, 2, 3};
    do {
      const Vec<Q> v = dr.basis(args[perm[0]], args[perm[1]], args[perm[2]], args[perm[3]]);
      const std::string order = labels[args[perm[0]]] + "," + labels[args[perm[1]]] + "," + labels[args[perm[2]]] +
                                "," + labels[args[perm[3]]];
      if (v == printed) matches.push_back("(nabla_" + order + ")");
      if (-v == printed) matches.push_back("-(nabla_" + order + ")");
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::string note = "engine convention (nabla_a R)(b,c)d with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y]; ";
    if (matches.empty()) {
      note += "no slot order or curvature sign reproduces the printed value";
      b.add(loc, quantity, format_vector(printed, labels), format_vector(engine, labels),
            LedgerStatus::paper_typo_suspected, note);
    } else {
      note += "printed value reproduced by ";
      for (std::size_t m = 0; m < matches.size(); ++m) note += (m ? ", " : "") + matches[m];
      b.add(loc, quantity, format_vector(printed, labels), format_vector(engine, labels),
            LedgerStatus::convention_dependent, note);
    }
  }

  for (const auto& v : t.verdicts) {
    if (v.quantity == "integrable" && s.acs) {
      b.verdict(v.quantity, v.value, is_integrable(s.alg, *s.acs).integrable);
    } else if (v.quantity == "almost_kahler" && s.acs) {
      b.verdict(v.quantity, v.value, is_almost_kahler(s.alg, s.metric, *s.acs).almost_kahler);
    } else if (v.quantity == "locally_symmetric") {
      b.verdict(v.quantity, v.value, is_locally_symmetric(dr).locally_symmetric,
                "pseudo-Riemannian local symmetry (nabla R = 0)");
    }
  }
  return out;
}

}  // namespace hlgeo
