#include "shiftrisk/shift.hpp"

#include "shiftrisk/csv_io.hpp"
#include "shiftrisk/error.hpp"

namespace shiftrisk {

std::vector<double> ScenarioDemand::empirical_series() const {
  std::vector<double> out(days());
  for (std::size_t t = 0; t < days(); ++t) out[t] = empirical(t);
  return out;
}

ScenarioDemand map_to_scenario(const RegressionFit& fit, const WinterDataset& data, const Scenario& scenario) {
  if (!scenario.phi_p) {
    throw ContractError("map_to_scenario: scenario " + scenario.id + " has no year effect (calibrate it first)");
  }
  const CoefficientSet& c = fit.coefficients;
  const double phi_hist = c.year_effect(data.winter_id());
  auto res_it = fit.residuals.find(data.winter_id());
  if (res_it == fit.residuals.end() || res_it->second.size() != data.days()) {
    throw ContractError("map_to_scenario: fit has no residuals for winter " + std::to_string(data.winter_id()));
  }

  ScenarioDemand sd;
  sd.scenario_id = scenario.id;
  sd.winter_id = data.winter_id();
  sd.residual_sd = fit.residual_sd;
  sd.dow_effect = c.dow_effects();
  sd.historic_dow = data.calendar.dow;
  sd.lambda_p = scenario.lambda_p;
  sd.gamma_p = scenario.gamma_p;
  sd.lead_days = data.lead_days;
  sd.trail_days = data.trail_days;
  sd.te_padded = data.te_padded;
  sd.ws_padded.resize(data.padded_days());
  for (std::size_t d = 0; d < sd.ws_padded.size(); ++d) sd.ws_padded[d] = data.ws_at_peak(static_cast<long>(d) - data.lead_days);
  sd.wind_hourly_padded = wind_power(data.weather.cf_onshore, data.weather.cf_offshore, scenario);

  const std::size_t n = data.days();
  sd.base_central.resize(n);
  sd.residual.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const long day = static_cast<long>(t);
    const double te = data.te_at_peak(day);
    const double ws = data.ws_at_peak(day);
    const double dsn = static_cast<double>(data.calendar.dsn[t]);
    const double central = c.alpha + scenario.lambda_p * te + c.beta1 * dsn + c.beta2 * dsn * dsn +
                           c.dow_effect(data.calendar.dow[t]) + scenario.gamma_p * ws + *scenario.phi_p;
    // Historic demand with the fitted weather and year terms swapped for the scenario's.
    const double empirical = data.observed_peak_demand[t] + (scenario.lambda_p - c.lambda1) * te +
                             (*scenario.phi_p - phi_hist) + (scenario.gamma_p - c.gamma1) * ws;
    sd.base_central[t] = central;
    sd.residual[t] = empirical - central;
  }
  sd.central = sd.base_central;
  return sd;
}

ScenarioDemand apply_shift(const ScenarioDemand& sd, ShiftSpec shift) {
  shift.k = wrap_dow_shift(shift.k);
  const long n = static_cast<long>(sd.days());
  if (-shift.tau > sd.lead_days || shift.tau > sd.trail_days) {
    throw BoundsError("weather shift " + std::to_string(shift.tau) + " needs " + std::to_string(std::abs(shift.tau)) +
                      " days of weather " + (shift.tau < 0 ? "before 1 November" : "after 31 March") +
                      " but only " + std::to_string(shift.tau < 0 ? sd.lead_days : sd.trail_days) + " are loaded");
  }
  ScenarioDemand out = sd;
  out.shift = shift;
  if (shift.tau == 0 && shift.k == 0) {
    out.central = sd.base_central;
    return out;
  }
  for (long t = 0; t < n; ++t) {
    const int m = sd.historic_dow[static_cast<std::size_t>(t)];
    const std::size_t here = static_cast<std::size_t>(t + sd.lead_days);
    const std::size_t there = static_cast<std::size_t>(t + sd.lead_days + shift.tau);
    const double delta = (sd.dow_effect[wrap_dow(m + shift.k) - 1] - sd.dow_effect[m - 1]) +
                         sd.lambda_p * (sd.te_padded[there] - sd.te_padded[here]) +
                         sd.gamma_p * (sd.ws_padded[there] - sd.ws_padded[here]);
    out.central[static_cast<std::size_t>(t)] = sd.base_central[static_cast<std::size_t>(t)] + delta;
  }
  return out;
}

ScenarioDemand shift_dow(const ScenarioDemand& sd, int k) {
  if (k < -3 || k > 3) throw ContractError("shift_dow: k must be in -3..+3, got " + std::to_string(k));
  return apply_shift(sd, {sd.shift.tau, sd.shift.k + k});
}

std::pair<ScenarioDemand, WindPowerSeries> shift_weather(const ScenarioDemand& sd, int tau) {
  ScenarioDemand out = apply_shift(sd, {sd.shift.tau + tau, sd.shift.k});
  WindPowerSeries wind = daily_wind(out);
  return {std::move(out), std::move(wind)};
}

WindPowerSeries daily_wind(const ScenarioDemand& sd) {
  WindPowerSeries out;
  out.scenario_id = sd.scenario_id;
  out.start = start_of(winter_start(sd.winter_id)) + std::chrono::hours{kPeakHour};
  out.values.resize(sd.days());
  for (std::size_t t = 0; t < sd.days(); ++t) {
    const long day = static_cast<long>(t) + sd.lead_days + sd.shift.tau;
    out.values[t] = sd.wind_hourly_padded.values.at(static_cast<std::size_t>(day) * kHoursPerDay + kPeakHour);
  }
  return out;
}

WindPowerSeries hourly_wind(const ScenarioDemand& sd) {
  WindPowerSeries out;
  out.scenario_id = sd.scenario_id;
  out.start = start_of(winter_start(sd.winter_id));
  const std::size_t first = static_cast<std::size_t>(sd.lead_days + sd.shift.tau) * kHoursPerDay;
  const auto begin = sd.wind_hourly_padded.values.begin() + static_cast<long>(first);
  out.values.assign(begin, begin + static_cast<long>(sd.days() * kHoursPerDay));
  return out;
}

void write_shifted_demand_csv(const std::filesystem::path& path, const ScenarioDemand& sd, const WinterDataset& data,
                              bool empirical) {
  if (!data.has_hourly_demand() || data.days() != sd.days()) {
    throw ContractError("write_shifted_demand_csv: needs the winter's hourly demand to rebuild hourly values");
  }
  HourlySeries s{start_of(winter_start(sd.winter_id)), std::vector<double>(sd.days() * kHoursPerDay),
                 SeriesUnit::megawatts};
  for (std::size_t t = 0; t < sd.days(); ++t) {
    const double peak = empirical ? sd.empirical(t) : sd.central[t];
    for (int h = 0; h < kHoursPerDay; ++h) {
      const std::size_t i = t * kHoursPerDay + h;
      s.values[i] = peak + (data.hourly_demand[i] - data.observed_peak_demand[t]);
    }
  }
  write_demand_csv(path, s);
}

}  // namespace shiftrisk
