#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "shiftrisk/dataset.hpp"
#include "shiftrisk/demand_model.hpp"
#include "shiftrisk/scenario.hpp"
#include "shiftrisk/weather.hpp"

namespace shiftrisk {

/// Weather shift tau (days) and day-of-week shift k (-3..+3).
struct ShiftSpec {
  int tau = 0;
  int k = 0;

  friend bool operator==(const ShiftSpec&, const ShiftSpec&) = default;
};

/// One winter of demand mapped onto a target scenario.
///
/// `central` is the regression formula with scenario coefficients (no residual) under the
/// currently applied shift. `residual` stays attached to the date whatever the shift, and the
/// empirical demand is always `central + residual`. Shifts are recomputed from
/// `base_central`, so undoing a shift restores the original bits.
struct ScenarioDemand {
  std::string scenario_id;
  int winter_id = 0;
  double residual_sd = 0.0;
  ShiftSpec shift{};

  std::vector<double> base_central;
  std::vector<double> central;
  std::vector<double> residual;

  // Inputs the shift formulae need, copied from the dataset and scenario.
  std::array<double, 7> dow_effect{};  // index m-1, reference day 0
  std::vector<int> historic_dow;
  double lambda_p = 0.0;
  double gamma_p = 0.0;
  int lead_days = 0;
  int trail_days = 0;
  std::vector<double> te_padded;
  std::vector<double> ws_padded;
  WindPowerSeries wind_hourly_padded;  // scenario wind over the padded weather window

  std::size_t days() const noexcept { return central.size(); }
  double empirical(std::size_t t) const { return central[t] + residual[t]; }
  std::vector<double> empirical_series() const;
};

/// Stochastic-residual central component and empirical-residual mapping for scenario p.
/// The scenario's year effect must be resolved.
ScenarioDemand map_to_scenario(const RegressionFit& fit, const WinterDataset& data, const Scenario& scenario);

/// Reassigns days of week: the date whose current day is m takes the effect of day m+k.
ScenarioDemand shift_dow(const ScenarioDemand& sd, int k);

/// Moves weather by tau days relative to date. Returns the demand and the scenario wind at
/// 18:00 of the weather day t+tau for every winter date t.
std::pair<ScenarioDemand, WindPowerSeries> shift_weather(const ScenarioDemand& sd, int tau);

/// Applies an absolute (tau, k) relative to the historic alignment.
ScenarioDemand apply_shift(const ScenarioDemand& sd, ShiftSpec shift);

/// Scenario wind at 18:00 for each winter date under the demand's current weather shift.
WindPowerSeries daily_wind(const ScenarioDemand& sd);
/// Scenario wind for every winter hour under the current weather shift (24 * tau hours).
WindPowerSeries hourly_wind(const ScenarioDemand& sd);

/// Writes shifted demand in the hourly demand CSV format: each day's (shifted) peak plus the
/// historic within-day offsets from `data`.
void write_shifted_demand_csv(const std::filesystem::path& path, const ScenarioDemand& sd, const WinterDataset& data,
                              bool empirical = true);

}  // namespace shiftrisk
