#include "hlgeo/geodesics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

namespace hlgeo {

EulerArnoldFlow::EulerArnoldFlow(const LieAlgebra& alg, const Metric& metric)
    : n_(alg.dim()), alpha_(n_ * n_ * n_), gram_(metric.gram().cast<double>()),
      gram_inv_(metric.gram_inverse().cast<double>()) {
  if (metric.dim() != n_) throw DimensionError("flow: metric and algebra dimensions differ");
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) alpha_[(i * n_ + j) * n_ + k] = alg.alpha(i, j, k).get_d();
  const Matrix<Rational> k = killing_form(alg);
  if (!scalar_is_zero(determinant(k))) {
    // G K^{-1} G computed exactly before rounding.
    casimir_ = (metric.gram() * solve(k, metric.gram())).cast<double>();
  }
}

Vec<double> EulerArnoldFlow::rhs(const Vec<double>& x) const {
  // z_w = <x, [x, E_w]> = sum_{i,k} (Gx)_k x_i alpha_{iwk}; then solve G r = z.
  const Vec<double> gx = gram_ * x;
  Vec<double> z(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t w = 0; w < n_; ++w) {
      const double* a = &alpha_[(i * n_ + w) * n_];
      double s = 0;
      for (std::size_t k = 0; k < n_; ++k) s += gx[k] * a[k];
      z[w] += x[i] * s;
    }
  }
  return gram_inv_ * z;
}

double EulerArnoldFlow::energy(const Vec<double>& x) const {
  double s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += x[i] * gram_(i, j) * x[j];
  return s;
}

double EulerArnoldFlow::casimir(const Vec<double>& x) const {
  if (!casimir_) return std::numeric_limits<double>::quiet_NaN();
  double s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) s += x[i] * (*casimir_)(i, j) * x[j];
  return s;
}

namespace {

bool escaped(const Vec<double>& x) {
  for (double v : x)
    if (!std::isfinite(v) || std::fabs(v) > kBlowupThreshold) return true;
  return false;
}

void record(GeodesicTrajectory& traj, const EulerArnoldFlow& flow, double t, const Vec<double>& x) {
  traj.states.push_back({t, x});
  traj.energy.push_back(flow.energy(x));
  traj.casimir.push_back(flow.casimir(x));
}

/// Increment of one classical RK4 step.
Vec<double> rk4_increment(const EulerArnoldFlow& flow, const Vec<double>& x, double h) {
  const std::size_t n = x.size();
  const Vec<double> k1 = flow.rhs(x);
  Vec<double> tmp(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k1[i];
  const Vec<double> k2 = flow.rhs(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * h * k2[i];
  const Vec<double> k3 = flow.rhs(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k3[i];
  const Vec<double> k4 = flow.rhs(tmp);
  Vec<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace

GeodesicTrajectory integrate_rk4(const EulerArnoldFlow& flow, const Vec<double>& x0, double t_end, double dt) {
  if (!(dt > 0) || !std::isfinite(dt)) throw InvalidParameterError("dt must be a positive finite number");
  if (!(t_end > 0) || !std::isfinite(t_end)) throw InvalidParameterError("t_end must be a positive finite number");
  if (x0.size() != flow.dim()) throw DimensionError("x0 has the wrong dimension");
  if (escaped(x0)) throw InvalidParameterError("x0 is not finite or already beyond the blow-up threshold");

  GeodesicTrajectory traj;
  traj.step = dt;
  const auto full_steps = static_cast<std::size_t>(std::floor(t_end / dt * (1 + 1e-12)));
  traj.states.reserve(full_steps + 2);
  record(traj, flow, 0.0, x0);

  Vec<double> x = x0;
  Vec<double> carry(x0.size(), 0.0);  // Kahan compensation of the state sum
  std::size_t k = 0;
  double t = 0;
  while (t < t_end) {
    double next = static_cast<double>(k + 1) * dt;
    if (k + 1 > full_steps || next > t_end) next = t_end;
    const double h = next - t;
    if (h <= 0) break;
    const Vec<double> dx = rk4_increment(flow, x, h);
    Vec<double> y(x.size());
    Vec<double> next_carry(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double inc = dx[i] - carry[i];
      y[i] = x[i] + inc;
      next_carry[i] = (y[i] - x[i]) - inc;
    }
    if (escaped(y)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "blow-up detected after t = %.6g", t);
      throw BlowupDetected(std::move(traj), buf);
    }
    x = std::move(y);
    carry = std::move(next_carry);
    t = next;
    ++k;
    record(traj, flow, t, x);
  }
  return traj;
}

void write_trajectory_csv(std::ostream& out, const GeodesicTrajectory& traj, std::size_t stride) {
  if (stride == 0) throw InvalidParameterError("stride must be positive");
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().x.size();
  out << "t";
  for (std::size_t i = 0; i < n; ++i) out << ",x" << (i + 1);
  out << ",energy,casimir\n";
  char buf[64];
  auto put = [&](double v) {
    if (std::isnan(v)) {
      out << "nan";
    } else {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf;
    }
  };
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    if (s % stride != 0 && s + 1 != traj.states.size()) continue;
    put(traj.states[s].t);
    for (double v : traj.states[s].x) {
      out << ',';
      put(v);
    }
    out << ',';
    put(traj.energy[s]);
    out << ',';
    put(traj.casimir[s]);
    out << '\n';
  }
}

Matrix<double> expm(const Matrix<double>& m) {
  if (!m.square()) throw DimensionError("expm of a non-square matrix");
  const std::size_t n = m.rows();
  // Extended precision keeps the rounding of the repeated squarings well below
  // double resolution.
  using Wide = long double;
  using WideMatrix = std::vector<Wide>;
  const auto mul = [n](const WideMatrix& a, const WideMatrix& b) {
    WideMatrix c(n * n, 0.0L);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t col = 0; col < n; ++col) c[r * n + col] += a[r * n + k] * b[k * n + col];
    return c;
  };
  const auto max_abs = [](const WideMatrix& a) {
    Wide v = 0;
    for (Wide x : a) v = std::max(v, std::fabs(x));
    return v;
  };

  double norm = 0;  // infinity norm
  for (std::size_t r = 0; r < n; ++r) {
    double row = 0;
    for (std::size_t c = 0; c < n; ++c) row += std::fabs(m(r, c));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  WideMatrix a(n * n), sum(n * n, 0.0L), term(n * n, 0.0L);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = std::ldexp(static_cast<Wide>(m(r, c)), -squarings);
  for (std::size_t i = 0; i < n; ++i) sum[i * n + i] = term[i * n + i] = 1.0L;
  for (int k = 1; k < 80; ++k) {
    term = mul(term, a);
    for (Wide& x : term) x /= k;
    for (std::size_t i = 0; i < n * n; ++i) sum[i] += term[i];
    if (max_abs(term) <= std::numeric_limits<Wide>::epsilon() * max_abs(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  Matrix<double> out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = static_cast<double>(sum[r * n + c]);
  return out;
}

std::pair<Vec<double>, Vec<double>> closed_form_complexified(const LieAlgebra& p, const Vec<double>& u0,
                                                             const Vec<double>& v0, double t) {
  if (u0.size() != p.dim() || v0.size() != p.dim()) throw DimensionError("closed form: dimension mismatch");
  const BasicLieAlgebra<double> pd = p.cast<double>();
  const Matrix<double> gen = (-2.0 * t) * ad_matrix(pd, u0);
  return {u0, expm(gen) * v0};
}

std::string to_string(Growth g) {
  switch (g) {
    case Growth::bounded: return "bounded";
    case Growth::polynomial: return "polynomial";
    case Growth::exponential: return "exponential";
  }
  return "unknown";
}

namespace {

double euclid(const Vec<double>& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

Growth classify_growth(const GeodesicTrajectory& traj) {
  if (traj.states.size() < 8) return Growth::bounded;
  const double t_end = traj.states.back().t;
  double m = 0, m4 = 0, m2 = 0;
  for (const auto& s : traj.states) {
    m = std::max(m, euclid(s.x));
    if (s.t <= t_end / 4) m4 = m;
    if (s.t <= t_end / 2) m2 = m;
  }
  const double floor = 1e-300;
  if (m2 <= floor) return Growth::bounded;
  const double late = m / m2;
  if (late <= 1.5) return Growth::bounded;
  // Exponential growth doubles the log-ratio over the twice-longer late window
  // and keeps accelerating; polynomial growth approaches a fixed ratio 2^p.
  const double early = m2 / std::max(m4, floor);
  if (late > 8.0 && std::log(late) > 1.5 * std::log(std::max(early, 1.0 + 1e-12))) return Growth::exponential;
  return Growth::polynomial;
}

TrajectorySummary summarize(const GeodesicTrajectory& traj, bool blowup) {
  TrajectorySummary s;
  s.x0 = traj.states.front().x;
  s.blowup = blowup;
  s.t_reached = traj.states.back().t;
  const double e0 = traj.energy.front();
  const double c0 = traj.casimir.front();
  s.casimir_drift = std::isnan(c0) ? std::numeric_limits<double>::quiet_NaN() : 0.0;
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    s.max_norm = std::max(s.max_norm, euclid(traj.states[i].x));
    s.energy_drift = std::max(s.energy_drift, std::fabs(traj.energy[i] - e0));
    if (!std::isnan(c0)) s.casimir_drift = std::max(s.casimir_drift, std::fabs(traj.casimir[i] - c0));
  }
  s.growth = blowup ? Growth::exponential : classify_growth(traj);
  return s;
}

TrajectorySummary run_trajectory(const EulerArnoldFlow& flow, const Vec<double>& x0, double t_end, double dt) {
  try {
    return summarize(integrate_rk4(flow, x0, t_end, dt), false);
  } catch (const BlowupDetected& e) {
    return summarize(e.partial(), true);
  }
}

Vec<double> seeded_point(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Vec<double> x(n);
  for (auto& v : x) v = 2.0 * (static_cast<double>(gen() >> 11) * 0x1.0p-53) - 1.0;
  return x;
}

std::vector<Vec<double>> probe_grid(std::size_t n, const ProbeOptions& opts) {
  std::vector<Vec<double>> grid;
  if (opts.sign_patterns) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Vec<double> x(n);
      std::size_t c = code;
      for (std::size_t i = n; i-- > 0;) {
        x[i] = static_cast<double>(c % 3) - 1.0;
        c /= 3;
      }
      grid.push_back(std::move(x));
    }
  }
  for (std::size_t s = 1; s <= opts.random_points; ++s) grid.push_back(seeded_point(n, s));
  return grid;
}

ProbeReport completeness_probe(const EulerArnoldFlow& flow, const ProbeOptions& opts) {
  ProbeReport report;
  for (const auto& x0 : probe_grid(flow.dim(), opts)) {
    TrajectorySummary s = run_trajectory(flow, x0, opts.t_end, opts.dt);
    if (s.blowup) {
      ++report.blowups;
    } else {
      report.max_energy_drift = std::max(report.max_energy_drift, s.energy_drift);
      if (!std::isnan(s.casimir_drift)) report.max_casimir_drift = std::max(report.max_casimir_drift, s.casimir_drift);
    }
    switch (s.growth) {
      case Growth::bounded: ++report.bounded; break;
      case Growth::polynomial: ++report.polynomial; break;
      case Growth::exponential: ++report.exponential; break;
    }
    report.trajectories.push_back(std::move(s));
  }
  return report;
}

}  // namespace hlgeo
