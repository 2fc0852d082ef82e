#include "hlgeo/verify.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "hlgeo/algebra_file.hpp"
#include "hlgeo/format.hpp"
#include "hlgeo/geodesics.hpp"
#include "hlgeo/ledger.hpp"
#include "hlgeo/report.hpp"

namespace hlgeo {

using Q = Rational;

bool VerifySuite::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ExpectedVerdicts expected_verdicts(const std::string& name) {
  static const std::map<std::string, ExpectedVerdicts> kTable = {
      {"sl2_x_sl2", {false, false, true}},      {"sl2_c", {true, false, false}},
      {"sl2_semidirect_r3", {false, false, true}}, {"n_sl2", {false, false, false}},
      {"sl2r_biinvariant", {std::nullopt, std::nullopt, true}}, {"flat_c3", {true, true, true}},
  };
  const auto it = kTable.find(name);
  return it == kTable.end() ? ExpectedVerdicts{} : it->second;
}

Rational random_rational(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Q q(num(gen), den(gen));
  q.canonicalize();
  return q;
}

Vec<Rational> random_rational_vector(std::mt19937_64& gen, std::size_t n) {
  Vec<Q> v(n);
  for (auto& x : v) x = random_rational(gen);
  return v;
}

namespace {

class Suite {
 public:
  explicit Suite(VerifySuite& s) : s_(s) {}

  void zero(const std::string& module, const std::string& name, const Q& defect) {
    add(module, name, sgn(defect) == 0, "defect " + to_string(defect));
  }
  void verdict(const std::string& module, const std::string& name, bool got, std::optional<bool> want) {
    if (!want) return;
    const auto word = [](bool b) { return std::string(b ? "true" : "false"); };
    add(module, name, got == *want, word(got) + " (expected " + word(*want) + ")");
  }
  void add(const std::string& module, const std::string& name, bool pass, const std::string& detail) {
    s_.checks.push_back({module, name, pass, detail});
  }

 private:
  VerifySuite& s_;
};

void lie_core_checks(const HomogeneousSpace& s, Suite& out, std::mt19937_64& gen) {
  const std::size_t n = s.alg.dim();
  out.zero("lie_core", "jacobi", jacobi_defect(s.alg).defect);

  bool anti = true;
  for (int t = 0; t < 20 && anti; ++t) {
    const Vec<Q> x = random_rational_vector(gen, n), y = random_rational_vector(gen, n);
    anti = bracket(s.alg, x, y) == -bracket(s.alg, y, x) && is_zero(bracket(s.alg, x, x));
  }
  out.add("lie_core", "bracket antisymmetry (random rationals)", anti, anti ? "exact" : "violated");

  const Matrix<Q> k = killing_form(s.alg);
  Q inv(0), adj(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec<Q> ea = basis_vector<Q>(n, a), eb = basis_vector<Q>(n, b), ec = basis_vector<Q>(n, c);
        const Vec<Q> kab = k * bracket(s.alg, ea, eb);
        const Vec<Q> kac = k * bracket(s.alg, ea, ec);
        Q v = kab[c] + kac[b];
        inv = std::max<Q>(inv, abs(v));
        const Q w = s.metric.inner(ad_star(s.alg, s.metric, ea, eb), ec) - s.metric.inner(eb, bracket(s.alg, ea, ec));
        adj = std::max<Q>(adj, abs(w));
      }
  out.zero("lie_core", "Killing form ad-invariance", inv);
  out.add("lie_core", "Killing form symmetric", is_symmetric(k), is_symmetric(k) ? "exact" : "asymmetric");
  out.zero("lie_core", "ad* adjoint identity", adj);
  if (s.name == "sl2r_biinvariant") {
    bool minus_ad = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (ad_star(s.alg, s.metric, basis_vector<Q>(n, a), basis_vector<Q>(n, b)) !=
            -s.alg.basis_bracket(a, b))
          minus_ad = false;
    out.add("lie_core", "ad* = -ad for the trace form", minus_ad, minus_ad ? "exact" : "differs");
    const bool k8 = k == Q(8) * s.metric.gram();
    out.add("lie_core", "Killing form = 8 diag(1,1,-1)", k8, k8 ? "exact" : "differs");
  }
}

void metric_geom_checks(const HomogeneousSpace& s, const GeometryReport& r, Suite& out) {
  const std::size_t n = s.alg.dim();
  if (s.metric.signature()) {
    const bool same = connection_orthonormal(s.alg, s.metric) == r.connection;
    out.add("metric_geom", "orthonormal formula = ad* formula", same,
            same ? std::to_string(n * n * n) + " coefficients equal" : "coefficients differ");
  }
  out.zero("metric_geom", "torsion", r.defects.torsion);
  out.zero("metric_geom", "metric compatibility", r.defects.metric_compatibility);
  out.zero("metric_geom", "curvature antisymmetry", r.defects.curvature_antisymmetry);
  out.zero("metric_geom", "first Bianchi", r.defects.first_bianchi);
  out.zero("metric_geom", "lowered curvature symmetries", r.defects.lowered_symmetry);
  out.zero("metric_geom", "second Bianchi", r.defects.second_bianchi);
  out.verdict("metric_geom", "locally_symmetric", r.locally_symmetric.locally_symmetric,
              expected_verdicts(s.name).locally_symmetric);
  if (s.name == "sl2r_biinvariant") {
    bool half = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (r.connection.basis(a, b) != scale(Q(1, 2), s.alg.basis_bracket(a, b))) half = false;
    out.add("metric_geom", "nabla = 1/2 bracket", half, half ? "exact" : "differs");
    bool minus_one = true;
    for (const auto& smp : r.sectional)
      if (!smp.value || *smp.value != Q(-1)) minus_one = false;
    out.add("metric_geom", "sectional curvature -1 on coordinate planes", minus_one, minus_one ? "exact" : "differs");
  }
  if (s.name == "flat_c3") out.add("metric_geom", "flat", r.curvature.is_zero(), r.curvature.is_zero() ? "R = 0" : "R != 0");
}

void hermitian_checks(const HomogeneousSpace& s, const GeometryReport& r, Suite& out, std::mt19937_64& gen) {
  if (!s.acs) return;
  const std::size_t n = s.alg.dim();
  const AlmostComplex& j = *s.acs;
  const auto& h = *r.hermitian;
  const bool sq = is_zero(j.matrix() * j.matrix() + Matrix<Q>::identity(n));
  out.add("hermitian", "J^2 = -Id", sq, sq ? "exact" : "violated");
  const bool compat = !compatibility_violation(s.metric, j);
  out.add("hermitian", "<JX,JY> = <X,Y>", compat, compat ? "exact" : "violated");
  out.add("hermitian", "omega nondegenerate", sgn(h.pfaffian) != 0, "Pf = " + to_string(h.pfaffian));

  Q anti(0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Vec<Q> ea = basis_vector<Q>(n, a), eb = basis_vector<Q>(n, b), ec = basis_vector<Q>(n, c);
        const Q v = d_omega(s.alg, s.metric, j, ea, eb, ec);
        anti = std::max<Q>(anti, abs(v + d_omega(s.alg, s.metric, j, eb, ea, ec)));
        anti = std::max<Q>(anti, abs(v + d_omega(s.alg, s.metric, j, ea, ec, eb)));
      }
  out.zero("hermitian", "d_omega total antisymmetry", anti);

  bool nj = true;
  for (int t = 0; t < 10 && nj; ++t) {
    const Vec<Q> x = random_rational_vector(gen, n), y = random_rational_vector(gen, n);
    const Vec<Q> base = nijenhuis(s.alg, j, x, y);
    nj = base == -nijenhuis(s.alg, j, y, x) && nijenhuis(s.alg, j, j.apply(x), y) == -j.apply(base) &&
         nijenhuis(s.alg, j, j.apply(x), j.apply(y)) == -base;
  }
  out.add("hermitian", "N_J antisymmetry and J-type identities (random rationals)", nj, nj ? "exact" : "violated");

  bool nabla_j_type = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vec<Q> ea = basis_vector<Q>(n, a), eb = basis_vector<Q>(n, b);
      if (nabla_j(r.connection, j, ea, j.apply(eb)) != -j.apply(nabla_j(r.connection, j, ea, eb)))
        nabla_j_type = false;
    }
  out.add("hermitian", "(nabla_X J)JY = -J(nabla_X J)Y", nabla_j_type, nabla_j_type ? "exact" : "violated");

  const ExpectedVerdicts want = expected_verdicts(s.name);
  out.verdict("hermitian", "integrable", h.integrable.integrable, want.integrable);
  out.verdict("hermitian", "almost_kahler", h.almost_kahler.almost_kahler, want.almost_kahler);
}

void isotropy_checks(const GeometryReport& r, Suite& out) {
  for (std::size_t g = 0; g < r.isotropy.generators.size(); ++g) {
    const auto& d = r.isotropy.generators[g];
    std::string detail = "derivation " + to_string(d.derivation) + ", metric_skew " + to_string(d.metric_skew);
    if (d.j_commutation) detail += ", j_commutation " + to_string(*d.j_commutation);
    out.add("hermitian", "isotropy generator D" + std::to_string(g + 1), d.all_zero(), detail);
  }
  if (r.isotropy.sl2_closure)
    out.add("hermitian", "isotropy closes as sl(2,R)", *r.isotropy.sl2_closure,
            *r.isotropy.sl2_closure ? "[D1,D2] = 2D3, [D1,D3] = 2D2, [D2,D3] = -2D1" : "relations fail");
}

void catalog_checks(const HomogeneousSpace& s, Suite& out) {
  if (!catalog::contains(s.name)) return;
  const DiscrepancyLedger l = ledger(s);
  std::size_t exact = 0;
  std::string flagged;
  for (const auto& e : l.entries) {
    if (e.status == LedgerStatus::exact_match) {
      ++exact;
    } else {
      flagged += (flagged.empty() ? "" : "; ") + e.quantity + " (" + to_string(e.status) + ")";
    }
  }
  out.add("catalog", "printed values matched or ledgered", l.complete(),
          std::to_string(exact) + " exact, " + std::to_string(l.mismatches()) + " ledgered" +
              (flagged.empty() ? "" : ": " + flagged));
}

void geodesic_checks(const HomogeneousSpace& s, Suite& out, std::mt19937_64& gen) {
  const std::size_t n = s.alg.dim();
  if (is_semisimple(s.alg)) {
    const AOperator a = AOperator::from_metric(s.alg, s.metric);
    out.add("geodesics", "A self-adjoint for the Killing form", a.self_adjoint(s.alg), "");
    bool agree = true;
    for (int t = 0; t < 100 && agree; ++t) {
      const Vec<Q> x = random_rational_vector(gen, n);
      agree = rhs_via_A(s.alg, a, x) == euler_arnold_rhs(s.alg, s.metric, x);
    }
    out.add("geodesics", "A^{-1}[Ax,x] = ad*_x x (100 random rationals)", agree, agree ? "exact" : "differs");
  }
  bool minus_ad = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (ad_star(s.alg, s.metric, basis_vector<Q>(n, i), basis_vector<Q>(n, k)) != -s.alg.basis_bracket(i, k))
        minus_ad = false;
  if (minus_ad) {
    bool vanishes = true;
    for (int t = 0; t < 20; ++t)
      if (!is_zero(euler_arnold_rhs(s.alg, s.metric, random_rational_vector(gen, n)))) vanishes = false;
    out.add("geodesics", "bi-invariant metric gives a stationary flow", vanishes, vanishes ? "exact" : "nonzero");
  }
  const EulerArnoldFlow flow(s.alg, s.metric);
  const TrajectorySummary sum = run_trajectory(flow, seeded_point(n, 1), 1.0, 1e-3);
  const bool ok = !sum.blowup && sum.energy_drift <= 1e-9 && (std::isnan(sum.casimir_drift) || sum.casimir_drift <= 1e-9);
  out.add("geodesics", "RK4 conservation on [0,1] (seed 1)", ok,
          "energy drift " + format_double(sum.energy_drift) + ", casimir drift " +
              (std::isnan(sum.casimir_drift) ? std::string("n/a") : format_double(sum.casimir_drift)));
}

void cli_checks(const HomogeneousSpace& s, Suite& out) {
  const std::string text = serialize_algebra(s);
  const HomogeneousSpace back = parse_algebra(text, s.name);
  const bool ok = back == s && serialize_algebra(back) == text;
  out.add("cli", "algebra file round-trip", ok, ok ? "byte-identical" : "differs");
  const bool det = canonical_dump(to_json(full_report(s))) == canonical_dump(to_json(full_report(back)));
  out.add("cli", "report determinism", det, det ? "byte-identical" : "differs");
}

}  // namespace

VerifySuite verify_space(const HomogeneousSpace& space) {
  VerifySuite suite;
  suite.algebra = space.name;
  Suite out(suite);
  std::mt19937_64 gen(20240601);
  validate(space);
  const GeometryReport r = full_report(space);
  lie_core_checks(space, out, gen);
  metric_geom_checks(space, r, out);
  hermitian_checks(space, r, out, gen);
  isotropy_checks(r, out);
  catalog_checks(space, out);
  geodesic_checks(space, out, gen);
  cli_checks(space, out);
  return suite;
}

std::string render_verify(const std::vector<VerifySuite>& suites, bool color) {
  const auto tag = [&](bool pass) {
    const std::string t = pass ? "ok" : "FAIL";
    if (!color) return t;
    return (pass ? "\x1b[32m" : "\x1b[31m") + t + "\x1b[0m";
  };
  std::ostringstream o;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_module;  // passed, total
  const std::vector<std::string> order = {"lie_core", "metric_geom", "hermitian", "catalog", "geodesics", "cli"};
  std::vector<std::string> failures;
  for (const auto& s : suites) {
    o << "== " << s.algebra << "\n";
    for (const auto& c : s.checks) {
      o << "  [" << tag(c.pass) << "] " << c.module << "  " << c.name << ": " << c.detail << "\n";
      auto& m = per_module[c.module];
      m.second += 1;
      if (c.pass) m.first += 1;
      else failures.push_back(s.algebra + ": " + c.module + " " + c.name);
    }
  }
  o << "\nsummary:\n";
  std::size_t passed = 0, total = 0;
  for (const auto& m : order) {
    const auto it = per_module.find(m);
    if (it == per_module.end()) continue;
    o << "  " << m << ": " << it->second.first << "/" << it->second.second << " passed\n";
    passed += it->second.first;
    total += it->second.second;
  }
  o << "  total: " << passed << "/" << total << " passed\n";
  if (!failures.empty()) {
    o << "failures:\n";
    for (const auto& f : failures) o << "  " << f << "\n";
  }
  return o.str();
}

}  // namespace hlgeo
