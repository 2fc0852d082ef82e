#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlgeo/metric.hpp"

namespace hlgeo {

// ---------------------------------------------------------------------------
// Exact forms of the Euler-Arnold vector field
// ---------------------------------------------------------------------------

/// x' = ad*_x x.
template <class T>
Vec<T> euler_arnold_rhs(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric, const Vec<T>& x) {
  return ad_star(alg, metric, x, x);
}

/// Self-adjoint (for the Killing form) isomorphism A with <X,Y> = kappa(X, A Y).
template <class T>
class BasicAOperator {
 public:
  explicit BasicAOperator(Matrix<T> a) : a_(std::move(a)) {
    if (!a_.square()) throw DimensionError("A must be square");
    try {
      a_inv_ = inverse(a_);
    } catch (const SingularOperatorError&) {
      throw SingularOperatorError("A is singular");
    }
  }

  /// A = K^{-1} G; requires a nondegenerate Killing form.
  static BasicAOperator from_metric(const BasicLieAlgebra<T>& alg, const BasicMetric<T>& metric) {
    const Matrix<T> k = killing_form(alg);
    Matrix<T> a;
    try {
      a = solve(k, metric.gram());
    } catch (const SingularOperatorError&) {
      throw SingularOperatorError("Killing form is degenerate; the algebra is not semisimple");
    }
    return BasicAOperator(std::move(a));
  }

  const Matrix<T>& matrix() const { return a_; }
  const Matrix<T>& inverse_matrix() const { return a_inv_; }

  /// kappa(Ax, y) = kappa(x, Ay) on the basis, i.e. K A symmetric.
  bool self_adjoint(const BasicLieAlgebra<T>& alg) const { return is_symmetric(killing_form(alg) * a_); }

 private:
  Matrix<T> a_;
  Matrix<T> a_inv_;
};

using AOperator = BasicAOperator<Rational>;

/// x' = A^{-1} [A x, x].
template <class T>
Vec<T> rhs_via_A(const BasicLieAlgebra<T>& alg, const BasicAOperator<T>& a, const Vec<T>& x) {
  check_dim(alg, x, "rhs_via_A");
  return a.inverse_matrix() * bracket(alg, a.matrix() * x, x);
}

// ---------------------------------------------------------------------------
// Numerical integration
// ---------------------------------------------------------------------------

struct GeodesicState {
  double t = 0;
  Vec<double> x;
};

struct GeodesicTrajectory {
  std::vector<GeodesicState> states;
  std::vector<double> energy;
  std::vector<double> casimir;  // NaN when the Killing form is degenerate
  double step = 0;
};

/// Raised when a coordinate leaves [-1e12, 1e12] or becomes non-finite.
class BlowupDetected : public Error {
 public:
  BlowupDetected(GeodesicTrajectory partial, const std::string& what)
      : Error(what), partial_(std::move(partial)) {}

  const GeodesicTrajectory& partial() const { return partial_; }
  const GeodesicState& last_good() const { return partial_.states.back(); }

 private:
  GeodesicTrajectory partial_;
};

inline constexpr double kBlowupThreshold = 1e12;

/// Floating-point Euler-Arnold field of a metric Lie algebra, with the
/// conserved quantities used to monitor integrations.
class EulerArnoldFlow {
 public:
  EulerArnoldFlow(const LieAlgebra& alg, const Metric& metric);

  std::size_t dim() const { return n_; }
  Vec<double> rhs(const Vec<double>& x) const;
  double energy(const Vec<double>& x) const;
  /// kappa(Ax, Ax) = x^T G K^{-1} G x; NaN for non-semisimple algebras.
  double casimir(const Vec<double>& x) const;
  bool has_casimir() const { return casimir_.has_value(); }

 private:
  std::size_t n_;
  std::vector<double> alpha_;  // dense structure constants
  Matrix<double> gram_;
  Matrix<double> gram_inv_;
  std::optional<Matrix<double>> casimir_;
};

/// Classical fixed-step RK4 on [0, t_end]. The last step is shortened to land
/// on t_end. Throws BlowupDetected, InvalidParameterError.
GeodesicTrajectory integrate_rk4(const EulerArnoldFlow& flow, const Vec<double>& x0, double t_end, double dt);

/// Writes `t,x1,...,xn,energy,casimir`, one row per `stride` recorded steps
/// (the final state is always written).
void write_trajectory_csv(std::ostream& out, const GeodesicTrajectory& traj, std::size_t stride = 1);

/// exp(M) by scaling and squaring with a Taylor series truncated once terms
/// fall below machine precision.
Matrix<double> expm(const Matrix<double>& m);

/// Exact solution of u' = 0, v' = 2[v, u] on p (+) p: (u0, exp(-2t ad_{u0}) v0).
std::pair<Vec<double>, Vec<double>> closed_form_complexified(const LieAlgebra& p, const Vec<double>& u0,
                                                             const Vec<double>& v0, double t);

enum class Growth { bounded, polynomial, exponential };

std::string to_string(Growth g);

/// Heuristic classification from the running maximum M(t) of the Euclidean
/// coordinate norm at t_end/4, t_end/2 and t_end.
Growth classify_growth(const GeodesicTrajectory& traj);

struct TrajectorySummary {
  Vec<double> x0;
  bool blowup = false;
  double t_reached = 0;
  double max_norm = 0;
  double energy_drift = 0;
  double casimir_drift = 0;  // NaN without a Casimir
  Growth growth = Growth::bounded;
};

TrajectorySummary summarize(const GeodesicTrajectory& traj, bool blowup);

/// Integrates and summarizes, converting BlowupDetected into a flagged summary.
TrajectorySummary run_trajectory(const EulerArnoldFlow& flow, const Vec<double>& x0, double t_end, double dt);

struct ProbeOptions {
  double t_end = 1.0;
  double dt = 1e-3;
  bool sign_patterns = true;     // every vector with coordinates in {-1, 0, 1}
  std::size_t random_points = 0; // seeds 1..random_points
};

struct ProbeReport {
  std::vector<TrajectorySummary> trajectories;
  std::size_t blowups = 0;
  std::size_t bounded = 0;
  std::size_t polynomial = 0;
  std::size_t exponential = 0;
  double max_energy_drift = 0;
  double max_casimir_drift = 0;
};

/// Deterministic grid: sign patterns in lexicographic order followed by the
/// seeded random points.
std::vector<Vec<double>> probe_grid(std::size_t n, const ProbeOptions& opts);

/// Point drawn from mt19937_64(seed), coordinates uniform in [-1, 1).
Vec<double> seeded_point(std::size_t n, std::uint64_t seed);

/// Integrates every grid point. Clean results are evidence consistent with
/// completeness, not a proof of it.
ProbeReport completeness_probe(const EulerArnoldFlow& flow, const ProbeOptions& opts);

}  // namespace hlgeo
