#pragma once

#include <string>
#include <vector>

namespace hlgeo {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
};

/// Runs acceptance criteria 1 through 10 in order.
std::vector<CriterionResult> run_acceptance();

/// The closed-form comparison behind criterion 8 for one initial point of
/// sl(2,C) = p + ip: maximum coordinate error over [0, t_end].
double closed_form_error(const std::vector<double>& u0, const std::vector<double>& v0, double t_end, double dt);

}  // namespace hlgeo
