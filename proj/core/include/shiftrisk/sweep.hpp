#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftrisk/calibration.hpp"
#include "shiftrisk/capacity.hpp"
#include "shiftrisk/dataset.hpp"
#include "shiftrisk/demand_model.hpp"
#include "shiftrisk/risk.hpp"
#include "shiftrisk/scenario.hpp"

namespace shiftrisk {

enum class SweepKind { dow, weather };

struct SweepConfig {
  SweepKind kind = SweepKind::dow;
  int tau_min = 0;  // weather sweeps only
  int tau_max = 0;
  ResidualMode mode = ResidualMode::empirical;
  bool with_lolh = false;
  unsigned threads = 1;
};

/// Risk for every winter under every shift of the sweep: k = -3..+3 for day-of-week sweeps,
/// tau_min..tau_max for weather sweeps. Demand is never renormalised per shift. Rows come
/// back ordered by (winter, tau, k) whatever the thread count.
std::vector<RiskResult> shift_sweep(const Scenario& scenario, const RegressionFit& fit,
                                    std::span<const WinterDataset> winters, const CapacityDistribution& dist,
                                    const SweepConfig& config);

struct TauWindow {
  int tau_min = 0;
  int tau_max = 0;

  std::string label() const;
  friend bool operator==(const TauWindow&, const TauWindow&) = default;
};

/// Hindcast (0,0) followed by +/-3, (-7,+6), +/-10, (-14,+13) and (-21,+20).
std::vector<TauWindow> standard_shift_windows();

struct WindowMean {
  std::string label;
  int tau_min = 0;
  int tau_max = 0;
  std::map<int, double> per_winter;
  double all_winters = 0.0;  // equal-weight mean of the per-winter means
};

/// Mean LOLE over the shifts in each window, treating every shift in the window as equally
/// likely. Throws ContractError if the sweep lacks a shift a window needs.
std::vector<WindowMean> window_average(std::span<const RiskResult> sweep, std::span<const TauWindow> windows,
                                       bool use_lolh = false);

/// Mean over the seven day-of-week alignments (all assumed equally likely), per winter.
WindowMean dow_average(std::span<const RiskResult> sweep, bool use_lolh = false);

std::string sweep_to_csv(std::span<const RiskResult> sweep);
std::string windows_to_csv(const std::string& scenario_id, std::span<const WindowMean> windows);
std::string sweep_to_json(std::span<const RiskResult> sweep);

}  // namespace shiftrisk
