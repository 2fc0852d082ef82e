#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "hlgeo/catalog.hpp"
#include "hlgeo/geodesics.hpp"
#include "hlgeo/verify.hpp"

using namespace hlgeo;
using Q = Rational;

namespace {

Vec<Q> e(std::size_t n, std::size_t one_based) { return basis_vector<Q>(n, one_based - 1); }

Vec<Q> concat(const Vec<Q>& a, const Vec<Q>& b) {
  Vec<Q> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double max_abs_diff(const Vec<double>& a, const Vec<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

/// aff(1) with [E1,E2] = E2 and metric diag(1,-1): a' = b^2, b' = ab. On the
/// diagonal a = b this is a' = a^2, which escapes at t = 1/a(0).
LieAlgebra affine_line() { return LieAlgebra(LieAlgebra::default_labels(2), {{0, 1, Vec<Q>{Q(0), Q(1)}}}); }

GeodesicTrajectory synthetic(double (*f)(double)) {
  GeodesicTrajectory traj;
  for (int k = 0; k <= 400; ++k) {
    const double t = 0.05 * k;
    traj.states.push_back({t, {f(t), 1.0}});
    traj.energy.push_back(0);
    traj.casimir.push_back(0);
  }
  traj.step = 0.05;
  return traj;
}

}  // namespace

TEST_CASE("Euler-Arnold field on bi-invariant and abelian algebras vanishes") {
  std::mt19937_64 gen(47);
  for (const char* name : {"sl2r_biinvariant", "sl2_x_sl2", "flat_c3"}) {
    INFO(name);
    const auto s = catalog::build(name);
    for (int t = 0; t < 10; ++t)
      CHECK(is_zero(euler_arnold_rhs(s.alg, s.metric, random_rational_vector(gen, s.alg.dim()))));
  }
}

TEST_CASE("Euler-Arnold field on sl(2,C)") {
  const auto s = catalog::build("sl2_c");
  const LieAlgebra p = catalog::sl2();
  std::mt19937_64 gen(53);
  for (int t = 0; t < 20; ++t) {
    const Vec<Q> u = random_rational_vector(gen, 3), v = random_rational_vector(gen, 3);
    CHECK(euler_arnold_rhs(s.alg, s.metric, concat(u, v)) == concat(zeros<Q>(3), scale(Q(2), bracket(p, v, u))));
  }
  CHECK(euler_arnold_rhs(s.alg, s.metric, concat(e(3, 3), e(3, 1))) == concat(zeros<Q>(3), scale(Q(4), e(3, 2))));
}

TEST_CASE("A operator form of the field") {
  const auto s = catalog::build("sl2_c");
  Matrix<Q> flip = Matrix<Q>::identity(6);
  for (std::size_t i = 3; i < 6; ++i) flip(i, i) = -1;
  const AOperator a(flip);
  std::mt19937_64 gen(59);
  for (int t = 0; t < 20; ++t) {
    const Vec<Q> x = random_rational_vector(gen, 6);
    CHECK(rhs_via_A(s.alg, a, x) == euler_arnold_rhs(s.alg, s.metric, x));
  }
  CHECK(rhs_via_A(s.alg, a, concat(e(3, 3), e(3, 1))) == concat(zeros<Q>(3), scale(Q(4), e(3, 2))));

  // The metric-derived operator is the same block map up to the Killing scale.
  const AOperator from_metric = AOperator::from_metric(s.alg, s.metric);
  CHECK(Q(16) * from_metric.matrix() == flip);
  CHECK(from_metric.self_adjoint(s.alg));

  const AOperator identity(Matrix<Q>::identity(6));
  CHECK(is_zero(rhs_via_A(s.alg, identity, random_rational_vector(gen, 6))));
  CHECK_THROWS_AS(AOperator(Matrix<Q>(6, 6)), SingularOperatorError);
}

TEST_CASE("both forms of the field agree on every semisimple catalog algebra") {
  std::mt19937_64 gen(61);
  for (const auto& entry : catalog::entries()) {
    const auto s = catalog::build(entry.name);
    if (!is_semisimple(s.alg)) {
      CHECK_THROWS_AS(AOperator::from_metric(s.alg, s.metric), SingularOperatorError);
      continue;
    }
    INFO(entry.name);
    const AOperator a = AOperator::from_metric(s.alg, s.metric);
    CHECK(a.self_adjoint(s.alg));
    for (int t = 0; t < 100; ++t) {
      const Vec<Q> x = random_rational_vector(gen, s.alg.dim());
      CHECK(rhs_via_A(s.alg, a, x) == euler_arnold_rhs(s.alg, s.metric, x));
    }
  }
}

TEST_CASE("floating-point flow matches the exact field") {
  std::mt19937_64 gen(67);
  for (const auto& entry : catalog::entries()) {
    INFO(entry.name);
    const auto s = catalog::build(entry.name);
    const EulerArnoldFlow flow(s.alg, s.metric);
    CHECK(flow.has_casimir() == is_semisimple(s.alg));
    for (int t = 0; t < 5; ++t) {
      const Vec<Q> x = random_rational_vector(gen, s.alg.dim());
      const Vec<Q> exact = euler_arnold_rhs(s.alg, s.metric, x);
      Vec<double> xd, want;
      for (const auto& c : x) xd.push_back(c.get_d());
      for (const auto& c : exact) want.push_back(c.get_d());
      CHECK(max_abs_diff(flow.rhs(xd), want) < 1e-12);
      CHECK(flow.energy(xd) == doctest::Approx(s.metric.inner(x, x).get_d()));
    }
  }
  const auto n = catalog::build("n_sl2");
  CHECK(std::isnan(EulerArnoldFlow(n.alg, n.metric).casimir(Vec<double>(6, 1.0))));
}

TEST_CASE("matrix exponential") {
  CHECK(expm(Matrix<double>(3, 3)) == Matrix<double>::identity(3));
  const Matrix<double> d = expm(Matrix<double>::diagonal({1.0, -2.0}));
  CHECK(d(0, 0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(d(1, 1) == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK(d(0, 1) == 0.0);
  // Rotation generator scaled well past the squaring threshold.
  Matrix<double> r(2, 2);
  r(0, 1) = -20;
  r(1, 0) = 20;
  const Matrix<double> rot = expm(r);
  CHECK(rot(0, 0) == doctest::Approx(std::cos(20.0)).epsilon(1e-12));
  CHECK(rot(1, 0) == doctest::Approx(std::sin(20.0)).epsilon(1e-12));
  // Nilpotent: exp(N) = I + N.
  Matrix<double> nil(2, 2);
  nil(0, 1) = 3;
  const Matrix<double> en = expm(nil);
  CHECK(en(0, 0) == 1.0);
  CHECK(en(0, 1) == doctest::Approx(3.0));
  CHECK_THROWS_AS(expm(Matrix<double>(2, 3)), DimensionError);
}

TEST_CASE("closed form on the complexification") {
  const LieAlgebra p = catalog::sl2();
  const double pi = std::numbers::pi;
  const auto [u, v] = closed_form_complexified(p, {0, 0, 1}, {1, 0, 0}, pi / 8);
  CHECK(max_abs_diff(u, {0, 0, 1}) == 0.0);
  CHECK(max_abs_diff(v, {0, 1, 0}) < 1e-14);

  const auto [u0, v0] = closed_form_complexified(p, {0, 0, 0}, {0.3, -0.2, 0.7}, 5.0);
  CHECK(max_abs_diff(u0, {0, 0, 0}) == 0.0);
  CHECK(max_abs_diff(v0, {0.3, -0.2, 0.7}) == 0.0);

  const auto [uh, vh] = closed_form_complexified(p, {1, 0, 0}, {0, 1, 0}, 1.0);
  CHECK(max_abs_diff(uh, {1, 0, 0}) == 0.0);
  CHECK(vh[0] == doctest::Approx(0.0));
  CHECK(vh[1] == doctest::Approx(std::cosh(4.0)).epsilon(1e-13));
  CHECK(vh[2] == doctest::Approx(-std::sinh(4.0)).epsilon(1e-13));

  CHECK_THROWS_AS(closed_form_complexified(p, {1, 0}, {0, 1, 0}, 1.0), DimensionError);
}

TEST_CASE("RK4 follows the rotation on sl(2,C)") {
  const auto s = catalog::build("sl2_c");
  const EulerArnoldFlow flow(s.alg, s.metric);
  const GeodesicTrajectory traj = integrate_rk4(flow, {0, 0, 1, 1, 0, 0}, 10, 1e-3);
  CHECK(traj.states.back().t == 10.0);
  CHECK(traj.energy.size() == traj.states.size());
  CHECK(traj.casimir.size() == traj.states.size());
  double err = 0, energy_drift = 0, casimir_drift = 0;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    const auto& st = traj.states[k];
    if (k > 0) CHECK(st.t > traj.states[k - 1].t);
    const Vec<double> want{0, 0, 1, std::cos(4 * st.t), std::sin(4 * st.t), 0};
    err = std::max(err, max_abs_diff(st.x, want));
    energy_drift = std::max(energy_drift, std::fabs(traj.energy[k] - traj.energy[0]));
    casimir_drift = std::max(casimir_drift, std::fabs(traj.casimir[k] - traj.casimir[0]));
  }
  CHECK(err <= 1e-6);
  CHECK(energy_drift <= 1e-9);
  CHECK(casimir_drift <= 1e-9);
  CHECK(classify_growth(traj) == Growth::bounded);
}

TEST_CASE("RK4 on a bi-invariant metric keeps the initial point") {
  const auto s = catalog::build("sl2r_biinvariant");
  const EulerArnoldFlow flow(s.alg, s.metric);
  const GeodesicTrajectory traj = integrate_rk4(flow, {1, 0, 1}, 10, 1e-2);
  for (const auto& st : traj.states) CHECK(st.x == Vec<double>{1, 0, 1});
  const TrajectorySummary sum = summarize(traj, false);
  CHECK(sum.energy_drift == 0.0);
  CHECK(sum.growth == Growth::bounded);
}

TEST_CASE("RK4 on the nilpotent group") {
  const auto s = catalog::build("n_sl2");
  const EulerArnoldFlow flow(s.alg, s.metric);
  const TrajectorySummary sum = run_trajectory(flow, {1, 0, 0, 0, 0, 1}, 100, 1e-3);
  CHECK_FALSE(sum.blowup);
  CHECK(sum.t_reached == 100.0);
  CHECK(sum.energy_drift <= 1e-9);
  CHECK(std::isnan(sum.casimir_drift));
}

TEST_CASE("last step lands on the end time") {
  const auto s = catalog::build("sl2_c");
  const EulerArnoldFlow flow(s.alg, s.metric);
  const GeodesicTrajectory traj = integrate_rk4(flow, {0, 0, 1, 1, 0, 0}, 0.25, 0.1);
  REQUIRE(traj.states.size() == 4);
  CHECK(traj.states[2].t == doctest::Approx(0.2));
  CHECK(traj.states.back().t == 0.25);
}

TEST_CASE("invalid integration parameters") {
  const auto s = catalog::build("sl2_c");
  const EulerArnoldFlow flow(s.alg, s.metric);
  const Vec<double> x0{0, 0, 1, 1, 0, 0};
  CHECK_THROWS_AS(integrate_rk4(flow, x0, 1, 0), InvalidParameterError);
  CHECK_THROWS_AS(integrate_rk4(flow, x0, 1, -1e-3), InvalidParameterError);
  CHECK_THROWS_AS(integrate_rk4(flow, x0, 0, 1e-3), InvalidParameterError);
  CHECK_THROWS_AS(integrate_rk4(flow, x0, std::nan(""), 1e-3), InvalidParameterError);
  CHECK_THROWS_AS(integrate_rk4(flow, {1, 0, 0}, 1, 1e-3), DimensionError);
  CHECK_THROWS_AS(integrate_rk4(flow, {0, 0, 1, 1, 0, std::nan("")}, 1, 1e-3), InvalidParameterError);
}

TEST_CASE("finite-time escape is detected") {
  const LieAlgebra aff = affine_line();
  const Metric lorentz = Metric::from_signature({Q(1), Q(-1)});
  CHECK(euler_arnold_rhs(aff, lorentz, Vec<Q>{Q(2), Q(3)}) == Vec<Q>{Q(9), Q(6)});
  const EulerArnoldFlow flow(aff, lorentz);
  try {
    integrate_rk4(flow, {1, 1}, 2, 1e-3);
    FAIL("escape not detected");
  } catch (const BlowupDetected& err) {
    const GeodesicState& last = err.last_good();
    CHECK(last.t < 1.01);
    CHECK(last.t > 0.99);
    CHECK(std::isfinite(last.x[0]));
  }
  const TrajectorySummary sum = run_trajectory(flow, {1, 1}, 2, 1e-3);
  CHECK(sum.blowup);
  CHECK(sum.t_reached < 1.01);
}

TEST_CASE("growth classification") {
  CHECK(classify_growth(synthetic([](double) { return 1.0; })) == Growth::bounded);
  CHECK(classify_growth(synthetic([](double t) { return std::sin(t); })) == Growth::bounded);
  CHECK(classify_growth(synthetic([](double t) { return 1.0 + t * t; })) == Growth::polynomial);
  CHECK(classify_growth(synthetic([](double t) { return std::exp(t); })) == Growth::exponential);
  CHECK(to_string(Growth::polynomial) == "polynomial");
}

TEST_CASE("trajectory CSV export") {
  const auto s = catalog::build("sl2r_biinvariant");
  const EulerArnoldFlow flow(s.alg, s.metric);
  const GeodesicTrajectory traj = integrate_rk4(flow, {1, 0, 1}, 1, 0.1);
  std::ostringstream all, strided;
  write_trajectory_csv(all, traj);
  write_trajectory_csv(strided, traj, 4);
  std::string header;
  std::istringstream in(all.str());
  std::getline(in, header);
  CHECK(header == "t,x1,x2,x3,energy,casimir");
  const auto lines = [](const std::string& text) { return std::count(text.begin(), text.end(), '\n'); };
  CHECK(lines(all.str()) == 1 + static_cast<long>(traj.states.size()));
  // Rows 0, 4, 8 and the final state 10.
  CHECK(lines(strided.str()) == 1 + 4);
  std::ostringstream ignored;
  CHECK_THROWS_AS(write_trajectory_csv(ignored, traj, 0), InvalidParameterError);

  const auto n = catalog::build("n_sl2");
  std::ostringstream nil;
  write_trajectory_csv(nil, integrate_rk4(EulerArnoldFlow(n.alg, n.metric), {1, 0, 0, 0, 0, 1}, 0.1, 0.1));
  CHECK(nil.str().find(",nan\n") != std::string::npos);
}

TEST_CASE("probe grid") {
  ProbeOptions opts;
  opts.random_points = 4;
  const auto grid = probe_grid(2, opts);
  REQUIRE(grid.size() == 9 + 4);
  CHECK(grid.front() == Vec<double>{-1, -1});
  CHECK(grid[8] == Vec<double>{1, 1});
  std::set<Vec<double>> distinct(grid.begin(), grid.begin() + 9);
  CHECK(distinct.size() == 9);
  for (std::size_t k = 9; k < grid.size(); ++k)
    for (double c : grid[k]) {
      CHECK(c >= -1.0);
      CHECK(c < 1.0);
    }
  CHECK(grid[9] == seeded_point(2, 1));
  CHECK(seeded_point(6, 7) == seeded_point(6, 7));
  CHECK(seeded_point(6, 7) != seeded_point(6, 8));

  opts.sign_patterns = false;
  CHECK(probe_grid(3, opts).size() == 4);
}

TEST_CASE("completeness probes") {
  const auto x = catalog::build("sl2_x_sl2");
  ProbeOptions opts;
  opts.t_end = 1;
  opts.dt = 1e-2;
  opts.random_points = 4;
  const ProbeReport rx = completeness_probe(EulerArnoldFlow(x.alg, x.metric), opts);
  CHECK(rx.trajectories.size() == 729 + 4);
  CHECK(rx.blowups == 0);
  CHECK(rx.bounded == rx.trajectories.size());
  CHECK(rx.max_energy_drift == 0.0);

  const auto c = catalog::build("sl2_c");
  const ProbeReport rc = completeness_probe(EulerArnoldFlow(c.alg, c.metric), opts);
  CHECK(rc.blowups == 0);
  CHECK(rc.exponential > 0);
  CHECK(rc.bounded + rc.polynomial + rc.exponential == rc.trajectories.size());

  const auto n = catalog::build("n_sl2");
  const ProbeReport rn = completeness_probe(EulerArnoldFlow(n.alg, n.metric), opts);
  CHECK(rn.blowups == 0);
}
