#pragma once

#include <span>
#include <vector>

#include "shiftrisk/capacity.hpp"
#include "shiftrisk/dataset.hpp"
#include "shiftrisk/demand_model.hpp"
#include "shiftrisk/risk.hpp"
#include "shiftrisk/scenario.hpp"
#include "shiftrisk/shift.hpp"

namespace shiftrisk {

enum class RiskMetric { lole, lolh };

struct CalibrationOptions {
  double tolerance = 1e-5;  // absolute, in days (or hours) per winter
  int max_iterations = 100;
  double initial_step_mw = 1000.0;
  double max_abs_phi_mw = 1e7;
  /// Alignments averaged during calibration. The default is the historic alignment only.
  std::vector<ShiftSpec> alignments{ShiftSpec{}};
};

struct CalibrationResult {
  double phi_p = 0.0;
  double achieved = 0.0;
  int bracket_iterations = 0;
  int bisection_iterations = 0;
};

/// Chooses the scenario year effect so the risk index averaged with equal weight over the
/// winters (and alignments) hits `target`. Bisection with automatic bracket expansion; the
/// index is nondecreasing in the year effect since it adds uniformly to demand.
CalibrationResult calibrate_year_effect(double target, const Scenario& scenario, const RegressionFit& fit,
                                        std::span<const WinterDataset> winters, const CapacityDistribution& dist,
                                        ResidualMode mode, RiskMetric metric, const CalibrationOptions& options = {});

/// Mean risk index across winters for a scenario with its year effect set, through the full
/// map -> shift -> lole/lolh path.
double mean_risk(const Scenario& scenario, const RegressionFit& fit, std::span<const WinterDataset> winters,
                 const CapacityDistribution& dist, ResidualMode mode, RiskMetric metric,
                 std::span<const ShiftSpec> alignments);

}  // namespace shiftrisk
