#include "hlgeo/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlgeo/algebra_file.hpp"
#include "hlgeo/format.hpp"
#include "hlgeo/geodesics.hpp"
#include "hlgeo/ledger.hpp"
#include "hlgeo/report.hpp"
#include "hlgeo/verify.hpp"

namespace hlgeo {

namespace {

using nlohmann::json;

bool color_enabled() {
  const char* v = std::getenv("HLGEO_COLOR");
  return v && std::string(v) == "1";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class UsageError : public Error {
 public:
  using Error::Error;
};

Vec<double> parse_x0(const std::string& csv, std::size_t n) {
  Vec<double> x;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      x.push_back(parse_rational(item).get_d());
    } catch (const ParseError& e) {
      throw UsageError("--x0: '" + item + "' is not a rational (" + e.what() + ")");
    }
  }
  if (x.size() != n)
    throw UsageError("--x0 needs " + std::to_string(n) + " comma-separated rationals, got " + std::to_string(x.size()));
  return x;
}

int cmd_catalog(const std::string& format, std::ostream& out) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& e : catalog::entries())
      arr.push_back({{"name", e.name}, {"reference", e.reference}, {"description", e.description}});
    out << canonical_dump(arr);
  } else {
    for (const auto& e : catalog::entries()) out << e.name << "  (" << e.reference << ")  " << e.description << "\n";
  }
  return kExitOk;
}

int cmd_report(const std::string& algebra, const std::string& format, bool with_ledger, bool timestamps,
               std::ostream& out) {
  const HomogeneousSpace s = resolve_algebra(algebra);
  const GeometryReport r = full_report(s);
  const TextStyle style{color_enabled()};
  if (format == "json") {
    json doc = to_json(r);
    if (with_ledger) doc = {{"report", doc}, {"ledger", to_json(ledger(s))}};
    if (timestamps) doc["generated_at"] = utc_timestamp();
    out << canonical_dump(doc);
  } else {
    if (timestamps) out << "generated_at: " << utc_timestamp() << "\n";
    out << render_text(r, style);
    if (with_ledger) out << "\n" << render_text(ledger(s), style);
  }
  return kExitOk;
}

void print_summary(std::ostream& out, const std::string& name, const TrajectorySummary& s, double t_end, double dt) {
  out << "algebra: " << name << "\n";
  out << "t_end: " << format_double(t_end) << "  dt: " << format_double(dt) << "\n";
  out << "t_reached: " << format_double(s.t_reached) << "\n";
  out << "blowup: " << (s.blowup ? "yes" : "no") << "\n";
  out << "energy drift: " << format_double(s.energy_drift) << "\n";
  out << "casimir drift: " << (std::isnan(s.casimir_drift) ? std::string("n/a (no Casimir)") : format_double(s.casimir_drift))
      << "\n";
  out << "max norm: " << format_double(s.max_norm) << "\n";
  out << "growth: " << to_string(s.growth) << "\n";
}

int cmd_geodesic(const std::string& algebra, const std::string& x0_csv, double t_end, double dt,
                 const std::string& out_path, std::size_t stride, std::ostream& out, std::ostream& err) {
  const HomogeneousSpace s = resolve_algebra(algebra);
  const Vec<double> x0 = parse_x0(x0_csv, s.alg.dim());
  if (!(t_end > 0) || !(dt > 0)) throw UsageError("--t-end and --dt must be positive");
  if (stride == 0) throw UsageError("--stride must be at least 1");
  const EulerArnoldFlow flow(s.alg, s.metric);

  GeodesicTrajectory traj;
  bool blowup = false;
  std::string blowup_message;
  try {
    traj = integrate_rk4(flow, x0, t_end, dt);
  } catch (const BlowupDetected& e) {
    traj = e.partial();
    blowup = true;
    blowup_message = e.what();
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw UsageError("cannot write '" + out_path + "'");
    write_trajectory_csv(f, traj, stride);
  }
  print_summary(out, s.name, summarize(traj, blowup), t_end, dt);
  if (blowup) {
    err << blowup_message << "; last good t = " << format_double(traj.states.back().t) << "\n";
    return kExitBlowup;
  }
  return kExitOk;
}

int cmd_probe(const std::string& algebra, const ProbeOptions& opts, const std::string& format, std::ostream& out) {
  const HomogeneousSpace s = resolve_algebra(algebra);
  if (!(opts.t_end > 0) || !(opts.dt > 0)) throw UsageError("--t-end and --dt must be positive");
  const EulerArnoldFlow flow(s.alg, s.metric);
  const ProbeReport p = completeness_probe(flow, opts);
  if (format == "json") {
    json traj = json::array();
    for (const auto& t : p.trajectories) {
      json j = {{"x0", t.x0},           {"blowup", t.blowup},         {"t_reached", t.t_reached},
                {"max_norm", t.max_norm}, {"energy_drift", t.energy_drift}, {"growth", to_string(t.growth)}};
      j["casimir_drift"] = std::isnan(t.casimir_drift) ? json(nullptr) : json(t.casimir_drift);
      traj.push_back(std::move(j));
    }
    out << canonical_dump({{"algebra", s.name},
                           {"t_end", opts.t_end},
                           {"dt", opts.dt},
                           {"blowups", p.blowups},
                           {"bounded", p.bounded},
                           {"polynomial", p.polynomial},
                           {"exponential", p.exponential},
                           {"max_energy_drift", p.max_energy_drift},
                           {"max_casimir_drift", flow.has_casimir() ? json(p.max_casimir_drift) : json(nullptr)},
                           {"trajectories", traj}});
  } else {
    out << "algebra: " << s.name << "\n";
    out << "grid: " << p.trajectories.size() << " initial conditions, t_end " << format_double(opts.t_end) << ", dt "
        << format_double(opts.dt) << "\n";
    out << "blowups: " << p.blowups << "\n";
    out << "growth: bounded " << p.bounded << ", polynomial " << p.polynomial << ", exponential " << p.exponential
        << "\n";
    out << "max energy drift (completed runs): " << format_double(p.max_energy_drift) << "\n";
    out << "max casimir drift (completed runs): "
        << (flow.has_casimir() ? format_double(p.max_casimir_drift) : std::string("n/a (no Casimir)")) << "\n";
    out << "a clean probe is evidence consistent with completeness, not a proof\n";
  }
  return kExitOk;
}

int cmd_verify(bool all, const std::string& algebra, std::ostream& out) {
  std::vector<VerifySuite> suites;
  if (all) {
    for (const auto& e : catalog::entries()) suites.push_back(verify_space(catalog::build(e.name)));
  } else {
    if (algebra.empty()) throw UsageError("verify needs --all or an algebra name");
    suites.push_back(verify_space(resolve_algebra(algebra)));
  }
  out << render_verify(suites, color_enabled());
  for (const auto& s : suites)
    if (!s.passed()) return kExitFailure;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact left-invariant geometry of metric Lie algebras", "hlgeo"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "json"});

  auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in algebras");
  catalog_cmd->add_option("--format", format, "text or json")->check(formats);

  std::string algebra;
  bool with_ledger = false, timestamps = false;
  auto* report_cmd = app.add_subcommand("report", "Connection, curvature and Hermitian report");
  report_cmd->add_option("algebra", algebra, "catalog name or algebra file")->required();
  report_cmd->add_option("--format", format, "text or json")->check(formats);
  report_cmd->add_flag("--ledger", with_ledger, "append the published-value ledger");
  report_cmd->add_flag("--timestamps", timestamps, "include a generation timestamp");

  std::string x0, out_path;
  double t_end = 0, dt = 1e-3;
  std::size_t stride = 1;
  auto* geo_cmd = app.add_subcommand("geodesic", "Integrate the Euler-Arnold equation with RK4");
  geo_cmd->add_option("algebra", algebra, "catalog name or algebra file")->required();
  geo_cmd->add_option("--x0", x0, "initial point, comma-separated rationals")->required();
  geo_cmd->add_option("--t-end", t_end, "final time")->required();
  geo_cmd->add_option("--dt", dt, "step size");
  geo_cmd->add_option("--out", out_path, "CSV output path");
  geo_cmd->add_option("--stride", stride, "write every n-th step");

  ProbeOptions popts;
  popts.t_end = 10;
  popts.random_points = 32;
  bool no_patterns = false;
  auto* probe_cmd = app.add_subcommand("probe", "Completeness probe over a grid of initial points");
  probe_cmd->add_option("algebra", algebra, "catalog name or algebra file")->required();
  probe_cmd->add_option("--t-end", popts.t_end, "final time");
  probe_cmd->add_option("--dt", popts.dt, "step size");
  probe_cmd->add_option("--random", popts.random_points, "number of seeded random points (seeds 1..n)");
  probe_cmd->add_flag("--no-sign-patterns", no_patterns, "skip the {-1,0,1} coordinate patterns");
  probe_cmd->add_option("--format", format, "text or json")->check(formats);

  bool all = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant and published-value checks");
  verify_cmd->add_flag("--all", all, "every catalog algebra");
  verify_cmd->add_option("algebra", algebra, "catalog name or algebra file");

  std::vector<std::string> argv_store;
  argv_store.push_back("hlgeo");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(format, out);
    if (*report_cmd) return cmd_report(algebra, format, with_ledger, timestamps, out);
    if (*geo_cmd) return cmd_geodesic(algebra, x0, t_end, dt, out_path, stride, out, err);
    if (*probe_cmd) {
      popts.sign_patterns = !no_patterns;
      return cmd_probe(algebra, popts, format, out);
    }
    if (*verify_cmd) return cmd_verify(all, algebra, out);
  } catch (const UnknownAlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidityError& e) {
    err << "validity error: " << e.invariant() << " violated";
    if (!e.witness().empty()) {
      err << " at (";
      for (std::size_t i = 0; i < e.witness().size(); ++i) err << (i ? "," : "") << "E" << e.witness()[i];
      err << ")";
    }
    err << ": " << e.what() << "\n";
    return kExitValidity;
  } catch (const DegenerateMetricError& e) {
    err << "validity error: metric_nondegenerate violated: " << e.what() << "\n";
    return kExitValidity;
  } catch (const DimensionError& e) {
    err << "validity error: dimension violated: " << e.what() << "\n";
    return kExitValidity;
  } catch (const BlowupDetected& e) {
    err << "blow-up detected: " << e.what() << "\n";
    return kExitBlowup;
  }
  return kExitUsage;
}

}  // namespace hlgeo
