#include "hlgeo/acceptance.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unistd.h>

#include "hlgeo/algebra_file.hpp"
#include "hlgeo/cli.hpp"
#include "hlgeo/format.hpp"
#include "hlgeo/geodesics.hpp"
#include "hlgeo/ledger.hpp"
#include "hlgeo/report.hpp"
#include "hlgeo/verify.hpp"

namespace hlgeo {

namespace {

using Q = Rational;

const std::vector<std::string> kGroups = {"sl2_x_sl2", "sl2_c", "sl2_semidirect_r3", "n_sl2"};

Vec<Q> e(std::size_t n, std::size_t one_based) { return basis_vector<Q>(n, one_based - 1); }

Vec<Q> sparse(std::size_t n, std::initializer_list<std::pair<std::size_t, int>> terms) {
  Vec<Q> v(n, Q(0));
  for (const auto& [k, c] : terms) v[k - 1] = c;
  return v;
}

class Criterion {
 public:
  Criterion(int id, std::string title) { r_.id = id; r_.title = std::move(title); r_.pass = true; }

  void expect(bool ok, const std::string& what) {
    if (!ok) r_.pass = false;
    r_.details.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& what) { r_.details.push_back("      " + what); }
  CriterionResult result() const { return r_; }

 private:
  CriterionResult r_;
};

CriterionResult criterion_1() {
  Criterion c(1, "published values reproduced exactly");
  {
    const auto s = catalog::build("sl2_x_sl2");
    const auto& j = *s.acs;
    const Vec<Q> nj = nijenhuis(s.alg, j, e(6, 1), e(6, 2));
    c.expect(nj == sparse(6, {{6, 2}, {3, -2}}), "sl2_x_sl2 N_J(E1,E2) = " + format_vector(nj, s.alg.labels()));
    const Q dw = d_omega(s.alg, s.metric, j, e(6, 1), e(6, 2), e(6, 6));
    c.expect(dw == Q(2, 3), "sl2_x_sl2 d_omega(E1,E2,E6) = " + to_string(dw));
  }
  {
    const auto s = catalog::build("sl2_c");
    const Q dw = d_omega(s.alg, s.metric, *s.acs, e(6, 1), e(6, 2), e(6, 6));
    c.expect(dw == Q(-2, 3), "sl2_c d_omega(E1,E2,E6) = " + to_string(dw));
    c.expect(is_integrable(s.alg, *s.acs).integrable, "sl2_c integrable");
  }
  {
    const auto s = catalog::build("sl2_semidirect_r3");
    const auto& j = *s.acs;
    const Vec<Q> nj = nijenhuis(s.alg, j, e(6, 1), e(6, 2));
    c.expect(nj == sparse(6, {{3, 2}}), "sl2_semidirect_r3 N_J(E1,E2) = " + format_vector(nj, s.alg.labels()));
    const Q dw = d_omega(s.alg, s.metric, j, e(6, 2), e(6, 3), e(6, 4));
    c.expect(dw == Q(-2, 3), "sl2_semidirect_r3 d_omega(E2,E3,E4) = " + to_string(dw));
    const Connection conn = connection_orthonormal(s.alg, s.metric);
    const Vec<Q> nJ = nabla_j(conn, j, e(6, 1), e(6, 2));
    c.expect(nJ == e(6, 6), "sl2_semidirect_r3 (nabla_E1 J)E2 = " + format_vector(nJ, s.alg.labels()));
    const auto v = is_locally_symmetric(covariant_derivative(conn, riemann(conn, s.alg)));
    c.expect(v.locally_symmetric, "sl2_semidirect_r3 nabla R = 0 on all basis 4-tuples");
  }
  {
    const auto s = catalog::build("n_sl2");
    const Q dw = d_omega(s.alg, s.metric, *s.acs, e(6, 1), e(6, 2), e(6, 3));
    c.expect(dw == Q(-2), "n_sl2 d_omega(E1,E2,E3) = " + to_string(dw));
  }
  for (const auto& name : kGroups) {
    const DiscrepancyLedger l = ledger(catalog::build(name));
    std::size_t exact = 0, flagged = 0;
    bool ok = true;
    for (const auto& en : l.entries) {
      if (en.location.find("connection") == std::string::npos) continue;
      if (en.status == LedgerStatus::exact_match) {
        ++exact;
        ok = ok && en.printed == en.engine;
      } else {
        ++flagged;
      }
    }
    c.expect(ok && exact > 0, name + " connection table: " + std::to_string(exact) + " entries exact, " +
                                  std::to_string(flagged) + " flagged in the ledger");
  }
  return c.result();
}

const LedgerEntry* find_entry(const DiscrepancyLedger& l, const std::string& quantity) {
  for (const auto& en : l.entries)
    if (en.quantity == quantity) return &en;
  return nullptr;
}

CriterionResult criterion_2() {
  Criterion c(2, "every unmatched published value is ledgered with the engine value");
  for (const auto& entry : catalog::entries()) {
    const DiscrepancyLedger l = ledger(catalog::build(entry.name));
    c.expect(l.complete(), entry.name + ": " + std::to_string(l.printed_quantities.size()) + " printed values, " +
                               std::to_string(l.mismatches()) + " ledgered mismatches");
  }
  struct Required {
    std::string algebra, quantity, engine;
  };
  const std::vector<Required> required = {
      {"sl2_x_sl2", "[E4,E6]", "2*E5"},
      {"n_sl2", "N_J(E1,E2)", "-2*E6"},
      {"sl2_c", "nabla_E5 E6", "E1"},
      {"sl2_c", "nabla R(E1,E2,E5,E6)", "-2*E2"},
  };
  for (const auto& r : required) {
    const DiscrepancyLedger l = ledger(catalog::build(r.algebra));
    const LedgerEntry* en = find_entry(l, r.quantity);
    const bool ok = en && en->status != LedgerStatus::exact_match && en->engine == r.engine;
    c.expect(ok, r.algebra + " " + r.quantity + ": " +
                     (en ? "printed " + en->printed + ", engine " + en->engine + " [" + to_string(en->status) + "]"
                         : std::string("missing")));
  }
  std::size_t failing = 0;
  for (const auto& entry : catalog::entries())
    if (!verify_space(catalog::build(entry.name)).passed()) ++failing;
  c.expect(failing == 0, "verify --all: " + std::to_string(failing) + " algebras with failing checks");
  return c.result();
}

CriterionResult criterion_3() {
  Criterion c(3, "verdict matrix of the four groups");
  std::set<std::string> integrable, kahler, symmetric;
  for (const auto& name : kGroups) {
    const GeometryReport r = full_report(catalog::build(name));
    const auto& L = r.space.alg.labels();
    if (r.hermitian->integrable.integrable) integrable.insert(name);
    if (r.hermitian->almost_kahler.almost_kahler) kahler.insert(name);
    if (r.locally_symmetric.locally_symmetric) {
      symmetric.insert(name);
    } else {
      const auto& w = *r.locally_symmetric.witness;
      c.note(name + " not locally symmetric, witness nabla R(" + L[w[0]] + "," + L[w[1]] + "," + L[w[2]] + "," +
             L[w[3]] + ") = " + format_vector(*r.symmetry_witness_value, L));
    }
  }
  const auto join = [](const std::set<std::string>& s) {
    std::string out = "{";
    for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
    return out + "}";
  };
  c.expect(integrable == std::set<std::string>{"sl2_c"}, "integrable = " + join(integrable));
  c.expect(kahler.empty(), "almost-Kahler = " + join(kahler));
  c.expect(symmetric == std::set<std::string>{"sl2_x_sl2", "sl2_semidirect_r3"},
           "locally symmetric = " + join(symmetric));
  return c.result();
}

CriterionResult criterion_4() {
  Criterion c(4, "sl(2,R) with the trace form has constant curvature -1");
  const auto s = catalog::build("sl2r_biinvariant");
  const Connection conn = connection_general(s.alg, s.metric);
  const Curvature r = riemann(conn, s.alg);
  std::mt19937_64 gen(4);
  std::size_t planes = 0, degenerate = 0, wrong = 0;
  while (planes < 50) {
    const Vec<Q> x = random_rational_vector(gen, 3), y = random_rational_vector(gen, 3);
    try {
      if (sectional_curvature(r, s.metric, x, y) != Q(-1)) ++wrong;
      ++planes;
    } catch (const DegeneratePlaneError&) {
      ++degenerate;
    }
  }
  c.expect(wrong == 0, std::to_string(planes) + " random nondegenerate planes, " + std::to_string(wrong) +
                           " with K != -1 (" + std::to_string(degenerate) + " degenerate draws skipped)");
  return c.result();
}

CriterionResult criterion_5() {
  Criterion c(5, "orthonormal-frame and ad* connection formulas agree");
  for (const auto& entry : catalog::entries()) {
    const auto s = catalog::build(entry.name);
    const std::size_t n = s.alg.dim();
    const Connection a = connection_orthonormal(s.alg, s.metric);
    const Connection b = connection_general(s.alg, s.metric);
    std::size_t differ = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (a.gamma(i, j, k) != b.gamma(i, j, k)) ++differ;
    c.expect(differ == 0, entry.name + ": " + std::to_string(n * n * n) + " coefficients, " +
                              std::to_string(differ) + " differ");
  }
  return c.result();
}

CriterionResult criterion_6() {
  Criterion c(6, "so(1,2) isotropy acts by metric-skew, J-linear derivations");
  for (const auto& name : kGroups) {
    const auto s = catalog::build(name);
    const IsotropyReport r = isotropy_report(s);
    bool zero = r.generators.size() == 3;
    for (const auto& g : r.generators) zero = zero && g.j_commutation && g.all_zero();
    c.expect(zero, name + ": " + std::to_string(r.generators.size()) +
                       " generators, derivation / metric-skew / J-commutation defects all zero");
    c.expect(r.sl2_closure.value_or(false), name + ": [D1,D2] = 2D3, [D1,D3] = 2D2, [D2,D3] = -2D1");
  }
  return c.result();
}

CriterionResult criterion_7() {
  Criterion c(7, "geodesic conservation and no blow-up over [0,100] (32 seeded points, dt = 1e-3)");
  for (const auto& name : kGroups) {
    const auto s = catalog::build(name);
    const EulerArnoldFlow flow(s.alg, s.metric);
    ProbeOptions opts;
    opts.t_end = 100;
    opts.dt = 1e-3;
    opts.sign_patterns = false;
    opts.random_points = 32;
    const ProbeReport p = completeness_probe(flow, opts);
    double max_e = 0, max_c = 0;
    std::size_t within = 0;
    for (const auto& t : p.trajectories) {
      const double cd = std::isnan(t.casimir_drift) ? 0.0 : t.casimir_drift;
      max_e = std::max(max_e, t.energy_drift);
      max_c = std::max(max_c, cd);
      if (!t.blowup && t.energy_drift <= 1e-9 && cd <= 1e-9) ++within;
    }
    std::ostringstream d;
    d << name << ": " << within << "/32 within 1e-9, blow-ups " << p.blowups << ", growth bounded/polynomial/exponential "
      << p.bounded << "/" << p.polynomial << "/" << p.exponential << ", max energy drift " << format_double(max_e)
      << ", max casimir drift " << (flow.has_casimir() ? format_double(max_c) : std::string("n/a"));
    c.expect(within == 32, d.str());
  }
  c.note("the flows of sl2_c, sl2_semidirect_r3 and n_sl2 are linear in a driver component and grow like");
  c.note("exp(rate * t) when it is spacelike; at t = 100 this passes the 1e12 blow-up threshold, so absolute");
  c.note("drift bounds over [0,100] cannot hold on a unit-scale grid");
  return c.result();
}

CriterionResult criterion_8() {
  Criterion c(8, "RK4 agrees with the closed form on sl(2,C) and converges at fourth order");
  struct Case {
    std::string label;
    std::vector<double> u0, v0;
  };
  const std::vector<Case> cases = {{"rotation u0 = X3, v0 = X1", {0, 0, 1}, {1, 0, 0}},
                                   {"hyperbolic u0 = X1/4, v0 = X2", {0.25, 0, 0}, {0, 1, 0}}};
  for (const auto& k : cases) {
    const double e1 = closed_form_error(k.u0, k.v0, 10.0, 1e-3);
    const double e2 = closed_form_error(k.u0, k.v0, 10.0, 5e-4);
    const double factor = e1 / e2;
    c.expect(e1 <= 1e-6, k.label + ": max error " + format_double(e1) + " at dt = 1e-3");
    c.expect(factor >= 14, k.label + ": halving dt reduces the error by " + format_double(factor));
  }
  return c.result();
}

CriterionResult criterion_9() {
  Criterion c(9, "differential-geometric identities hold exactly");
  for (const auto& entry : catalog::entries()) {
    const auto s = catalog::build(entry.name);
    const GeometryReport r = full_report(s);
    c.expect(r.defects.all_zero(), entry.name + ": torsion, compatibility, Bianchi I/II, lowered symmetries");
    if (s.acs) {
      const std::size_t n = s.alg.dim();
      bool anti = true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t d = 0; d < n; ++d) {
            const Q v = d_omega(s.alg, s.metric, *s.acs, e(n, a + 1), e(n, b + 1), e(n, d + 1));
            anti = anti && v == -d_omega(s.alg, s.metric, *s.acs, e(n, b + 1), e(n, a + 1), e(n, d + 1)) &&
                   v == -d_omega(s.alg, s.metric, *s.acs, e(n, a + 1), e(n, d + 1), e(n, b + 1));
          }
      c.expect(anti, entry.name + ": d_omega totally antisymmetric");
    }
  }
  return c.result();
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int rc = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

CriterionResult criterion_10() {
  Criterion c(10, "command-line contract");
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("hlgeo_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto write = [&](const std::string& file, const std::string& text) {
    std::ofstream(dir / file) << text;
    return (dir / file).string();
  };

  std::string out, err;
  c.expect(run({"catalog"}, &out) == kExitOk && out.find("n_sl2  (§6.4)") != std::string::npos, "exit 0: catalog");
  c.expect(run({"catalog", "--format", "xml"}) == kExitUsage, "exit 2: catalog --format xml");
  c.expect(run({"verify", "no_such_algebra"}) == kExitUsage, "exit 2: verify no_such_algebra");
  c.expect(run({"geodesic", "sl2_c", "--x0", "1,2", "--t-end", "1"}) == kExitUsage, "exit 2: malformed --x0");
  c.expect(run({"frobnicate"}) == kExitUsage, "exit 2: unknown subcommand");

  const std::string bad_json = write("truncated.json", "{\n  \"dim\": 3,\n  \"basis\": [\"A\", \"B\"\n");
  const int rc3 = run({"report", bad_json}, nullptr, &err);
  c.expect(rc3 == kExitParse && err.find("line") != std::string::npos, "exit 3: malformed JSON (" + err.substr(0, err.find(':')) + ")");
  const std::string unknown_key = write(
      "unknown_key.json",
      "{\"dim\": 1, \"basis\": [\"A\"], \"signature\": [1], \"brackets\": [], \"colour\": \"blue\"}\n");
  c.expect(run({"report", unknown_key}) == kExitParse, "exit 3: unknown key");

  const std::string jacobi = write("jacobi.json",
                                   "{\"dim\": 3, \"basis\": [\"E1\", \"E2\", \"E3\"], \"signature\": [1, 1, 1],\n"
                                   " \"brackets\": [{\"i\": 1, \"j\": 2, \"coeffs\": {\"1\": \"1\"}},\n"
                                   "              {\"i\": 1, \"j\": 3, \"coeffs\": {\"2\": \"1\"}}]}\n");
  const int rc4 = run({"report", jacobi}, nullptr, &err);
  c.expect(rc4 == kExitValidity && err.find("jacobi_defect") != std::string::npos &&
               err.find("(E1,E2,E3)") != std::string::npos,
           "exit 4: Jacobi violation names jacobi_defect and a witness triple");

  c.expect(run({"geodesic", "sl2_c", "--x0", "1,0,0,0,1,0", "--t-end", "100"}, nullptr, &err) == kExitBlowup &&
               err.find("last good t") != std::string::npos,
           "exit 5: spacelike sl2_c geodesic blows up and reports the last good t");
  c.expect(run({"geodesic", "n_sl2", "--x0", "1,0,0,0,0,1", "--t-end", "100", "--dt", "0.001"}) == kExitOk,
           "exit 0: n_sl2 geodesic over [0,100]");

  bool deterministic = true;
  for (const auto& entry : catalog::entries()) {
    for (const std::string fmt : {"text", "json"}) {
      std::string a, b;
      run({"report", entry.name, "--format", fmt, "--ledger"}, &a);
      run({"report", entry.name, "--format", fmt, "--ledger"}, &b);
      deterministic = deterministic && !a.empty() && a == b;
    }
  }
  c.expect(deterministic, "report output byte-identical across runs (text and json, all catalog entries)");

  bool round_trip = true;
  for (const auto& entry : catalog::entries()) {
    const auto s = catalog::build(entry.name);
    const std::string text = serialize_algebra(s);
    const std::string path = write(entry.name + ".json", text);
    const HomogeneousSpace back = load_algebra_file(path);
    round_trip = round_trip && back == s && serialize_algebra(back) == text;
    std::string from_file, from_name;
    run({"report", path, "--format", "json"}, &from_file);
    run({"report", entry.name, "--format", "json"}, &from_name);
    round_trip = round_trip && from_file == from_name;
  }
  c.expect(round_trip, "algebra files round-trip byte-identically and report like the catalog entries");

  std::error_code ec;
  fs::remove_all(dir, ec);
  return c.result();
}

}  // namespace

double closed_form_error(const std::vector<double>& u0, const std::vector<double>& v0, double t_end, double dt) {
  const auto s = catalog::build("sl2_c");
  const LieAlgebra p = catalog::sl2();
  const EulerArnoldFlow flow(s.alg, s.metric);
  Vec<double> x0 = u0;
  x0.insert(x0.end(), v0.begin(), v0.end());
  GeodesicTrajectory traj;
  try {
    traj = integrate_rk4(flow, x0, t_end, dt);
  } catch (const BlowupDetected&) {
    return std::numeric_limits<double>::infinity();
  }
  double err = 0;
  for (const auto& st : traj.states) {
    const auto [u, v] = closed_form_complexified(p, u0, v0, st.t);
    for (std::size_t i = 0; i < 3; ++i) {
      err = std::max(err, std::fabs(st.x[i] - u[i]));
      err = std::max(err, std::fabs(st.x[i + 3] - v[i]));
    }
  }
  return err;
}

std::vector<CriterionResult> run_acceptance() {
  return {criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(),
          criterion_6(), criterion_7(), criterion_8(), criterion_9(), criterion_10()};
}

}  // namespace hlgeo
