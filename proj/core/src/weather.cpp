#include "shiftrisk/weather.hpp"

#include <algorithm>

#include "shiftrisk/error.hpp"

namespace shiftrisk {

std::vector<double> trailing_four_hour_mean(const std::vector<double>& values) {
  std::vector<double> out(values.size());
  for (std::size_t h = 0; h < values.size(); ++h) {
    const std::size_t first = h >= 3 ? h - 3 : 0;
    double sum = 0.0;
    for (std::size_t j = first; j <= h; ++j) sum += values[j];
    out[h] = sum / static_cast<double>(h - first + 1);
  }
  return out;
}

EffectiveTempSeries effective_temperature(const HourlySeries& ta) {
  if (ta.size() < 2 * static_cast<std::size_t>(kHoursPerDay)) {
    throw ValidationError("effective_temperature: need at least 48 hourly values, got " + std::to_string(ta.size()));
  }
  EffectiveTempSeries out;
  const std::vector<double> to = trailing_four_hour_mean(ta.values);
  out.hourly_te.resize(to.size());
  for (std::size_t h = 0; h < to.size(); ++h) {
    out.hourly_te[h] = h < static_cast<std::size_t>(kHoursPerDay) ? to[h] : 0.5 * (out.hourly_te[h - kHoursPerDay] + to[h]);
  }
  for (std::size_t h = 0; h < to.size(); ++h) {
    if (hour_of_day(ta.time_at(h)) == kPeakHour) out.daily_te_at_peak.push_back(out.hourly_te[h]);
  }
  return out;
}

WindPowerSeries wind_power(const HourlySeries& cf_onshore, const HourlySeries& cf_offshore, const Scenario& scenario) {
  if (cf_onshore.start != cf_offshore.start || cf_onshore.size() != cf_offshore.size()) {
    throw AlignmentError("wind_power: onshore and offshore capacity factors are not aligned");
  }
  if (scenario.cap_onshore_mw < 0.0 || scenario.cap_offshore_mw < 0.0) {
    throw ContractError("wind_power: installed capacities must be non-negative");
  }
  WindPowerSeries out;
  out.scenario_id = scenario.id;
  out.start = cf_onshore.start;
  out.values.resize(cf_onshore.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] = cf_onshore.values[i] * scenario.cap_onshore_mw + cf_offshore.values[i] * scenario.cap_offshore_mw;
  }
  return out;
}

}  // namespace shiftrisk
