#include "shiftrisk/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shiftrisk/error.hpp"

namespace shiftrisk {

double mean_risk(const Scenario& scenario, const RegressionFit& fit, std::span<const WinterDataset> winters,
                 const CapacityDistribution& dist, ResidualMode mode, RiskMetric metric,
                 std::span<const ShiftSpec> alignments) {
  double total = 0.0;
  for (const auto& w : winters) {
    const ScenarioDemand base = map_to_scenario(fit, w, scenario);
    for (const ShiftSpec& a : alignments) {
      const ScenarioDemand sd = apply_shift(base, a);
      total += metric == RiskMetric::lole ? lole(dist, sd, daily_wind(sd), mode).lole
                                          : *lolh(dist, sd, w, hourly_wind(sd), mode).lolh;
    }
  }
  return total / static_cast<double>(winters.size() * alignments.size());
}

namespace {

// Net demand (demand - wind) per period at phi = 0, for each winter and alignment.
std::vector<std::vector<double>> net_demand_at_zero(const Scenario& scenario, const RegressionFit& fit,
                                                    std::span<const WinterDataset> winters, ResidualMode mode,
                                                    RiskMetric metric, std::span<const ShiftSpec> alignments,
                                                    const CapacityDistribution& dist) {
  const Scenario zero = scenario.with_year_effect(0.0);
  std::vector<std::vector<double>> out;
  for (const auto& w : winters) {
    const ScenarioDemand base = map_to_scenario(fit, w, zero);
    for (const ShiftSpec& a : alignments) {
      const ScenarioDemand sd = apply_shift(base, a);
      check_mode(dist, sd, mode);
      std::vector<double> net;
      if (metric == RiskMetric::lole) {
        const WindPowerSeries wind = daily_wind(sd);
        net.resize(sd.days());
        for (std::size_t t = 0; t < sd.days(); ++t) {
          net[t] = (mode == ResidualMode::empirical ? sd.empirical(t) : sd.central[t]) - wind.values[t];
        }
      } else {
        if (!w.has_hourly_demand()) {
          throw ContractError("calibration: LOLH needs hourly demand for winter " + std::to_string(w.winter_id()));
        }
        const WindPowerSeries wind = hourly_wind(sd);
        net.resize(sd.days() * kHoursPerDay);
        for (std::size_t t = 0; t < sd.days(); ++t) {
          const double peak = mode == ResidualMode::empirical ? sd.empirical(t) : sd.central[t];
          for (int h = 0; h < kHoursPerDay; ++h) {
            const std::size_t i = t * kHoursPerDay + static_cast<std::size_t>(h);
            net[i] = peak + (w.hourly_demand[i] - w.observed_peak_demand[t]) - wind.values[i];
          }
        }
      }
      out.push_back(std::move(net));
    }
  }
  return out;
}

}  // namespace

CalibrationResult calibrate_year_effect(double target, const Scenario& scenario, const RegressionFit& fit,
                                        std::span<const WinterDataset> winters, const CapacityDistribution& dist,
                                        ResidualMode mode, RiskMetric metric, const CalibrationOptions& options) {
  if (!(target > 0.0)) throw ContractError("calibrate_year_effect: target must be positive");
  if (winters.empty()) throw ContractError("calibrate_year_effect: no winters");
  if (options.alignments.empty()) throw ContractError("calibrate_year_effect: no alignments");

  const auto nets = net_demand_at_zero(scenario, fit, winters, mode, metric, options.alignments, dist);
  double periods = 0.0;
  for (const auto& n : nets) periods += static_cast<double>(n.size());
  periods /= static_cast<double>(nets.size());
  const char* unit = metric == RiskMetric::lole ? "days" : "hours";
  if (target >= periods) {
    std::ostringstream msg;
    msg << "calibration target " << target << " " << unit << "/winter is unreachable: the index cannot exceed "
        << periods << " " << unit << " per winter";
    throw CalibrationError(msg.str());
  }

  auto risk = [&](double phi) {
    double total = 0.0;
    for (const auto& n : nets) {
      for (double v : n) total += lolp_day(dist, v + phi);
    }
    return total / static_cast<double>(nets.size());
  };

  CalibrationResult result;
  const double f0 = risk(0.0);
  if (std::abs(f0 - target) <= options.tolerance) {
    result.achieved = f0;
    return result;
  }
  const double dir = f0 < target ? 1.0 : -1.0;
  double near = 0.0;
  double far = dir * options.initial_step_mw;
  double f_far = risk(far);
  ++result.bracket_iterations;
  while ((dir > 0.0 && f_far < target) || (dir < 0.0 && f_far > target)) {
    if (std::abs(far) >= options.max_abs_phi_mw) {
      std::ostringstream msg;
      msg << "calibration target " << target << " " << unit << "/winter not reached; achieved range ["
          << risk(-options.max_abs_phi_mw) << ", " << risk(options.max_abs_phi_mw) << "] for |phi| <= "
          << options.max_abs_phi_mw << " MW";
      throw CalibrationError(msg.str());
    }
    near = far;
    far = std::clamp(far * 2.0, -options.max_abs_phi_mw, options.max_abs_phi_mw);
    f_far = risk(far);
    ++result.bracket_iterations;
  }
  double lo = std::min(near, far);
  double hi = std::max(near, far);
  double best = std::abs(f_far - target) < std::abs(f0 - target) ? far : 0.0;
  double best_err = std::min(std::abs(f_far - target), std::abs(f0 - target));
  double best_val = best == far ? f_far : f0;
  while (result.bisection_iterations < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double f = risk(mid);
    ++result.bisection_iterations;
    if (std::abs(f - target) < best_err) {
      best = mid;
      best_err = std::abs(f - target);
      best_val = f;
    }
    if (best_err <= options.tolerance) break;
    (f < target ? lo : hi) = mid;
    if (hi - lo <= 1e-9 * std::max(1.0, std::abs(mid))) break;
  }
  if (best_err > options.tolerance) {
    std::ostringstream msg;
    msg << "calibration stalled at phi = " << best << " MW with " << best_val << " " << unit << "/winter (target "
        << target << "); the risk index jumps across the target";
    throw CalibrationError(msg.str());
  }
  result.phi_p = best;
  result.achieved = best_val;
  return result;
}

}  // namespace shiftrisk
