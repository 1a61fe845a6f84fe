#pragma once

#include <string>
#include <vector>

#include "shiftrisk/dataset.hpp"
#include "shiftrisk/scenario.hpp"

namespace shiftrisk {

struct EffectiveTempSeries {
  std::vector<double> hourly_te;  // aligned to the source series
  std::vector<double> daily_te_at_peak;  // one value per source hour stamped 18:00
};

/// Effective temperature: TO is the mean of the last four hourly temperatures and
/// TE_h = (TE_{h-24} + TO_h) / 2. The first 24 hours start from TE = TO, and TO uses
/// whatever preceding hours exist during the first three.
EffectiveTempSeries effective_temperature(const HourlySeries& ta);

/// Four-hour trailing mean used inside effective_temperature.
std::vector<double> trailing_four_hour_mean(const std::vector<double>& values);

struct WindPowerSeries {
  std::string scenario_id;
  Hour start{};
  std::vector<double> values;  // MW per step
};

/// Scenario wind output: cf_on * onshore capacity + cf_off * offshore capacity.
WindPowerSeries wind_power(const HourlySeries& cf_onshore, const HourlySeries& cf_offshore, const Scenario& scenario);

}  // namespace shiftrisk
