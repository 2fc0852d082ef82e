#include "hlgeo/report.hpp"

#include <sstream>

#include "hlgeo/format.hpp"

namespace hlgeo {

using nlohmann::json;
using Q = Rational;

bool IdentityDefects::all_zero() const {
  for (const Q* q : {&jacobi, &torsion, &metric_compatibility, &curvature_antisymmetry, &first_bianchi,
                     &lowered_symmetry, &second_bianchi})
    if (sgn(*q) != 0) return false;
  return true;
}

bool IsotropyReport::all_zero() const {
  for (const auto& g : generators)
    if (!g.all_zero()) return false;
  return !sl2_closure || *sl2_closure;
}

bool closes_as_sl2(const Matrix<Q>& d1, const Matrix<Q>& d2, const Matrix<Q>& d3) {
  return commutator(d1, d2) == Q(2) * d3 && commutator(d1, d3) == Q(2) * d2 && commutator(d2, d3) == Q(-2) * d1;
}

IsotropyReport isotropy_report(const HomogeneousSpace& s) {
  IsotropyReport out;
  const AlmostComplex* j = s.acs ? &*s.acs : nullptr;
  for (const auto& d : s.isotropy) out.generators.push_back(isotropy_structure_check(s.alg, s.metric, j, d));
  if (s.isotropy.size() == 3) out.sl2_closure = closes_as_sl2(s.isotropy[0], s.isotropy[1], s.isotropy[2]);
  return out;
}

GeometryReport full_report(const HomogeneousSpace& s) {
  validate(s);
  GeometryReport r;
  r.space = s;
  const std::size_t n = s.alg.dim();
  r.connection = connection_general(s.alg, s.metric);
  r.curvature = riemann(r.connection, s.alg);
  const CurvatureDerivative dr = covariant_derivative(r.connection, r.curvature);
  r.locally_symmetric = is_locally_symmetric(dr);
  if (r.locally_symmetric.witness) {
    const auto& w = *r.locally_symmetric.witness;
    r.symmetry_witness_value = dr.basis(w[0], w[1], w[2], w[3]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      SectionalSample sample{i, j, std::nullopt};
      try {
        sample.value = sectional_curvature(r.curvature, s.metric, basis_vector<Q>(n, i), basis_vector<Q>(n, j));
      } catch (const DegeneratePlaneError&) {
      }
      r.sectional.push_back(sample);
    }
  r.defects.jacobi = jacobi_defect(s.alg).defect;
  r.defects.torsion = torsion_defect(r.connection, s.alg);
  r.defects.metric_compatibility = metric_compatibility_defect(r.connection, s.metric);
  r.defects.curvature_antisymmetry = curvature_antisymmetry_defect(r.curvature);
  r.defects.first_bianchi = first_bianchi_defect(r.curvature);
  r.defects.lowered_symmetry = lowered_symmetry_defect(r.curvature, s.metric);
  r.defects.second_bianchi = second_bianchi_defect(dr);
  r.killing = killing_form(s.alg);
  r.semisimple = is_semisimple(s.alg);

  if (s.acs) {
    const AlmostComplex& j = *s.acs;
    HermitianReport h;
    h.omega = kahler_form(s.metric, j);
    h.pfaffian = pfaffian(h.omega);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        Vec<Q> v = nijenhuis(s.alg, j, basis_vector<Q>(n, a), basis_vector<Q>(n, b));
        if (!is_zero(v)) h.nijenhuis.push_back({{a, b}, std::move(v)});
        for (std::size_t c = b + 1; c < n; ++c) {
          Q w = d_omega(s.alg, s.metric, j, basis_vector<Q>(n, a), basis_vector<Q>(n, b), basis_vector<Q>(n, c));
          if (sgn(w) != 0) h.d_omega.push_back({{a, b, c}, std::move(w)});
        }
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec<Q> v = nabla_j(r.connection, j, basis_vector<Q>(n, a), basis_vector<Q>(n, b));
        if (!is_zero(v)) h.nabla_j.push_back({{a, b}, std::move(v)});
      }
    h.integrable = is_integrable(s.alg, j);
    h.almost_kahler = is_almost_kahler(s.alg, s.metric, j);
    r.hermitian = std::move(h);
  }
  r.isotropy = isotropy_report(s);
  return r;
}

namespace {

std::string key(std::initializer_list<std::size_t> idx) {
  std::string out;
  for (std::size_t i : idx) {
    if (!out.empty()) out += ",";
    out += std::to_string(i + 1);
  }
  return out;
}

json sparse(const Vec<Q>& v) {
  json out = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (sgn(v[k]) != 0) out[std::to_string(k + 1)] = to_string(v[k]);
  return out;
}

json dense(const Matrix<Q>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <std::size_t N>
json witness(const std::optional<std::array<std::size_t, N>>& w) {
  if (!w) return nullptr;
  json out = json::array();
  for (std::size_t i : *w) out.push_back(i + 1);
  return out;
}

json defects_json(const IsotropyDefects<Q>& d) {
  json out = {{"derivation", to_string(d.derivation)}, {"metric_skew", to_string(d.metric_skew)}};
  out["j_commutation"] = d.j_commutation ? json(to_string(*d.j_commutation)) : json(nullptr);
  return out;
}

}  // namespace

json to_json(const GeometryReport& r) {
  const auto& s = r.space;
  const std::size_t n = s.alg.dim();
  json out;
  out["algebra"] = s.name;
  out["dim"] = n;
  out["basis"] = s.alg.labels();
  out["gram"] = dense(s.metric.gram());

  json brackets = json::object();
  for (const auto& b : s.alg.brackets()) brackets[key({b.i, b.j})] = sparse(b.coeffs);
  out["brackets"] = brackets;

  json conn = json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<Q> v = r.connection.basis(i, j);
      if (!is_zero(v)) conn[key({i, j})] = sparse(v);
    }
  out["connection"] = conn;

  json curv = json::object();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec<Q> v = r.curvature.basis(i, j, k);
        if (!is_zero(v)) curv[key({i, j, k})] = sparse(v);
      }
  out["curvature"] = curv;
  out["flat"] = r.curvature.is_zero();
  out["locally_symmetric"] = r.locally_symmetric.locally_symmetric;
  out["locally_symmetric_witness"] = witness(r.locally_symmetric.witness);
  out["locally_symmetric_witness_value"] =
      r.symmetry_witness_value ? sparse(*r.symmetry_witness_value) : json(nullptr);

  json sec = json::object();
  for (const auto& smp : r.sectional)
    sec[key({smp.i, smp.j})] = smp.value ? json(to_string(*smp.value)) : json(nullptr);
  out["sectional_curvature"] = sec;

  out["identity_defects"] = {
      {"jacobi", to_string(r.defects.jacobi)},
      {"torsion", to_string(r.defects.torsion)},
      {"metric_compatibility", to_string(r.defects.metric_compatibility)},
      {"curvature_antisymmetry", to_string(r.defects.curvature_antisymmetry)},
      {"first_bianchi", to_string(r.defects.first_bianchi)},
      {"lowered_symmetry", to_string(r.defects.lowered_symmetry)},
      {"second_bianchi", to_string(r.defects.second_bianchi)},
  };
  out["killing_form"] = dense(r.killing);
  out["semisimple"] = r.semisimple;

  if (r.hermitian) {
    const auto& h = *r.hermitian;
    out["J"] = dense(s.acs->matrix());
    out["omega"] = dense(h.omega);
    out["pfaffian"] = to_string(h.pfaffian);
    json nj = json::object();
    for (const auto& [ij, v] : h.nijenhuis) nj[key({ij[0], ij[1]})] = sparse(v);
    out["nijenhuis"] = nj;
    json dw = json::object();
    for (const auto& [ijk, v] : h.d_omega) dw[key({ijk[0], ijk[1], ijk[2]})] = to_string(v);
    out["d_omega"] = dw;
    json nJ = json::object();
    for (const auto& [ij, v] : h.nabla_j) nJ[key({ij[0], ij[1]})] = sparse(v);
    out["nabla_J"] = nJ;
    out["integrable"] = h.integrable.integrable;
    out["integrable_witness"] = witness(h.integrable.witness);
    out["almost_kahler"] = h.almost_kahler.almost_kahler;
    out["almost_kahler_witness"] = witness(h.almost_kahler.witness);
  } else {
    out["J"] = nullptr;
  }

  json iso = json::array();
  for (const auto& d : r.isotropy.generators) iso.push_back(defects_json(d));
  out["isotropy"] = {{"generators", iso},
                     {"sl2_closure", r.isotropy.sl2_closure ? json(*r.isotropy.sl2_closure) : json(nullptr)}};
  return out;
}

json to_json(const DiscrepancyLedger& l) {
  json entries = json::array();
  for (const auto& e : l.entries)
    entries.push_back({{"location", e.location},
                       {"quantity", e.quantity},
                       {"printed", e.printed},
                       {"engine", e.engine},
                       {"status", to_string(e.status)},
                       {"note", e.note}});
  return {{"algebra", l.algebra},
          {"entries", entries},
          {"mismatches", l.mismatches()},
          {"complete", l.complete()}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string verdict(bool v, const TextStyle& st) {
  const std::string word = v ? "true" : "false";
  if (!st.color) return word;
  return (v ? "\x1b[32m" : "\x1b[31m") + word + "\x1b[0m";
}

template <std::size_t N>
std::string witness_text(const std::optional<std::array<std::size_t, N>>& w, const std::vector<std::string>& labels) {
  if (!w) return "";
  return " (witness " + format_indices(std::vector<std::size_t>(w->begin(), w->end()), labels) + ")";
}

}  // namespace

std::string render_text(const GeometryReport& r, const TextStyle& st) {
  const auto& s = r.space;
  const auto& L = s.alg.labels();
  const std::size_t n = s.alg.dim();
  std::ostringstream o;
  o << "algebra: " << s.name << " (dim " << n << ")\n";
  if (const auto& eps = s.metric.signature()) {
    o << "signature:";
    for (const auto& e : *eps) o << (sgn(e) > 0 ? " +" : " -");
    o << "\n";
  } else {
    o << "metric: general Gram matrix\n";
  }

  o << "\nbrackets:\n";
  const auto bs = s.alg.brackets();
  if (bs.empty()) o << "  (abelian)\n";
  for (const auto& b : bs) o << "  [" << L[b.i] << "," << L[b.j] << "] = " << format_vector(b.coeffs, L) << "\n";

  o << "\nconnection:\n";
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<Q> v = r.connection.basis(i, j);
      if (is_zero(v)) continue;
      any = true;
      o << "  nabla_" << L[i] << " " << L[j] << " = " << format_vector(v, L) << "\n";
    }
  if (!any) o << "  (all zero)\n";

  o << "\ncurvature:\n";
  any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec<Q> v = r.curvature.basis(i, j, k);
        if (is_zero(v)) continue;
        any = true;
        o << "  R(" << L[i] << "," << L[j] << ")" << L[k] << " = " << format_vector(v, L) << "\n";
      }
  if (!any) o << "  (flat)\n";

  o << "\nsectional curvature:\n";
  for (const auto& smp : r.sectional)
    o << "  K(" << L[smp.i] << "," << L[smp.j] << ") = " << (smp.value ? to_string(*smp.value) : "degenerate")
      << "\n";

  o << "\nlocally_symmetric: " << verdict(r.locally_symmetric.locally_symmetric, st);
  if (r.locally_symmetric.witness) {
    const auto& w = *r.locally_symmetric.witness;
    o << " (witness nabla R(" << L[w[0]] << "," << L[w[1]] << "," << L[w[2]] << "," << L[w[3]]
      << ") = " << format_vector(*r.symmetry_witness_value, L) << ")";
  }
  o << "\n";

  o << "\nidentity defects:\n";
  o << "  jacobi = " << to_string(r.defects.jacobi) << "\n";
  o << "  torsion = " << to_string(r.defects.torsion) << "\n";
  o << "  metric_compatibility = " << to_string(r.defects.metric_compatibility) << "\n";
  o << "  curvature_antisymmetry = " << to_string(r.defects.curvature_antisymmetry) << "\n";
  o << "  first_bianchi = " << to_string(r.defects.first_bianchi) << "\n";
  o << "  lowered_symmetry = " << to_string(r.defects.lowered_symmetry) << "\n";
  o << "  second_bianchi = " << to_string(r.defects.second_bianchi) << "\n";

  o << "\nKilling form:";
  if (is_zero(r.killing)) {
    o << " 0";
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      o << "\n ";
      for (std::size_t j = 0; j < n; ++j) o << " " << to_string(r.killing(i, j));
    }
  }
  o << "\nsemisimple: " << verdict(r.semisimple, st) << "\n";

  if (r.hermitian) {
    const auto& h = *r.hermitian;
    o << "\nhermitian:\n";
    o << "  Pf(omega) = " << to_string(h.pfaffian) << "\n";
    for (const auto& [ij, v] : h.nijenhuis)
      o << "  N_J(" << L[ij[0]] << "," << L[ij[1]] << ") = " << format_vector(v, L) << "\n";
    if (h.nijenhuis.empty()) o << "  N_J = 0\n";
    for (const auto& [ijk, v] : h.d_omega)
      o << "  d_omega(" << L[ijk[0]] << "," << L[ijk[1]] << "," << L[ijk[2]] << ") = " << to_string(v) << "\n";
    if (h.d_omega.empty()) o << "  d_omega = 0\n";
    for (const auto& [ij, v] : h.nabla_j)
      o << "  (nabla_" << L[ij[0]] << " J)" << L[ij[1]] << " = " << format_vector(v, L) << "\n";
    if (h.nabla_j.empty()) o << "  nabla J = 0\n";
    o << "  integrable: " << verdict(h.integrable.integrable, st) << witness_text(h.integrable.witness, L) << "\n";
    o << "  almost_kahler: " << verdict(h.almost_kahler.almost_kahler, st) << witness_text(h.almost_kahler.witness, L)
      << "\n";
  }

  o << "\nisotropy:\n";
  if (r.isotropy.generators.empty()) o << "  (none)\n";
  for (std::size_t g = 0; g < r.isotropy.generators.size(); ++g) {
    const auto& d = r.isotropy.generators[g];
    o << "  D" << g + 1 << ": derivation " << to_string(d.derivation) << ", metric_skew " << to_string(d.metric_skew);
    if (d.j_commutation) o << ", j_commutation " << to_string(*d.j_commutation);
    o << "\n";
  }
  if (r.isotropy.sl2_closure) o << "  sl2 closure: " << verdict(*r.isotropy.sl2_closure, st) << "\n";
  return o.str();
}

std::string render_text(const DiscrepancyLedger& l, const TextStyle& st) {
  std::ostringstream o;
  o << "ledger: " << l.algebra << " (" << l.entries.size() << " entries, " << l.mismatches() << " not exactly matched)\n";
  for (const auto& e : l.entries) {
    std::string status = to_string(e.status);
    if (st.color && e.status != LedgerStatus::exact_match) status = "\x1b[33m" + status + "\x1b[0m";
    o << "  " << e.location << "  " << e.quantity << ": printed " << e.printed << ", engine " << e.engine << "  ["
      << status << "]\n";
    if (!e.note.empty()) o << "      " << e.note << "\n";
  }
  o << "complete: " << verdict(l.complete(), st) << "\n";
  return o.str();
}

}  // namespace hlgeo
