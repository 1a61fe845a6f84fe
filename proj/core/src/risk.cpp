#include "shiftrisk/risk.hpp"

#include <cmath>

#include "shiftrisk/error.hpp"

namespace shiftrisk {

std::string_view to_string(ResidualMode mode) {
  return mode == ResidualMode::empirical ? "empirical" : "stochastic";
}

ResidualMode parse_residual_mode(std::string_view text) {
  if (text == "empirical") return ResidualMode::empirical;
  if (text == "stochastic") return ResidualMode::stochastic;
  throw InputError("unknown residual mode '" + std::string(text) + "' (expected empirical or stochastic)");
}

void check_mode(const CapacityDistribution& dist, const ScenarioDemand& sd, ResidualMode mode) {
  if (mode == ResidualMode::empirical && dist.is_smeared()) {
    throw ContractError("empirical residual mode needs the unsmeared capacity distribution");
  }
  if (mode == ResidualMode::stochastic) {
    if (std::abs(dist.sigma() - sd.residual_sd) > 1e-9 * std::max(1.0, sd.residual_sd)) {
      throw ContractError("stochastic residual mode needs the capacity distribution smeared with the residual SD (" +
                          std::to_string(sd.residual_sd) + " MW), got sigma " + std::to_string(dist.sigma()));
    }
  }
}

namespace {

double demand_at(const ScenarioDemand& sd, std::size_t t, ResidualMode mode) {
  return mode == ResidualMode::empirical ? sd.empirical(t) : sd.central[t];
}

RiskResult blank(const ScenarioDemand& sd, ResidualMode mode) {
  RiskResult r;
  r.scenario_id = sd.scenario_id;
  r.winter_id = sd.winter_id;
  r.shift = sd.shift;
  r.mode = mode;
  return r;
}

}  // namespace

RiskResult lole(const CapacityDistribution& dist, const ScenarioDemand& sd, const WindPowerSeries& wind,
                ResidualMode mode) {
  check_mode(dist, sd, mode);
  if (wind.values.size() != sd.days()) {
    throw ContractError("lole: wind series has " + std::to_string(wind.values.size()) + " values for " +
                        std::to_string(sd.days()) + " days");
  }
  RiskResult r = blank(sd, mode);
  r.per_day_lolp.resize(sd.days());
  double total = 0.0;
  for (std::size_t t = 0; t < sd.days(); ++t) {
    r.per_day_lolp[t] = lolp_day(dist, demand_at(sd, t, mode) - wind.values[t]);
    total += r.per_day_lolp[t];
  }
  r.lole = total;
  return r;
}

RiskResult lolh(const CapacityDistribution& dist, const ScenarioDemand& sd, const WinterDataset& data,
                const WindPowerSeries& wind_hourly, ResidualMode mode) {
  check_mode(dist, sd, mode);
  if (!data.has_hourly_demand()) {
    throw ContractError("lolh: winter " + std::to_string(data.winter_id()) + " has no hourly demand for the profile");
  }
  const std::size_t n = sd.days();
  if (data.days() != n || wind_hourly.values.size() != n * kHoursPerDay) {
    throw ContractError("lolh: hourly wind or dataset not aligned with the demand");
  }
  RiskResult r = lole(dist, sd, daily_wind(sd), mode);
  r.per_hour_lolp.resize(n * kHoursPerDay);
  double total = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double peak = demand_at(sd, t, mode);
    for (int h = 0; h < kHoursPerDay; ++h) {
      const std::size_t i = t * kHoursPerDay + static_cast<std::size_t>(h);
      const double offset = data.hourly_demand[i] - data.observed_peak_demand[t];
      r.per_hour_lolp[i] = lolp_day(dist, peak + offset - wind_hourly.values[i]);
      total += r.per_hour_lolp[i];
    }
  }
  r.lolh = total;
  return r;
}

}  // namespace shiftrisk
