#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcarnot/cycle.hpp"
#include "qcarnot/sweep.hpp"

namespace qcarnot {

// Scan used by the self-check: log-spaced tau in [tau_min, tau_max] for every
// hot temperature.
struct CheckOptions {
  CycleParams base;
  std::vector<double> temps_hot{kDefaultHotTemperatures.begin(), kDefaultHotTemperatures.end()};
  double tau_min = 1e-3;
  double tau_max = 10.0;
  std::size_t tau_count = 100;
  // Bias (peV) added to the C'->C heat of every report before evaluation.
  // Negative control for the harness; 0 disables it.
  double perturb = 0.0;
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  // Grid point with the largest residual.
  std::string worst_point;
};

// Evaluates every cycle identity and sign property over the scan.
std::vector<CheckResult> run_checks(const CheckOptions& options);

// Same evaluation on reports computed elsewhere.
std::vector<CheckResult> evaluate_checks(const std::vector<CycleReport>& reports);

}  // namespace qcarnot
