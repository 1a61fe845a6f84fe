#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftrisk/capacity.hpp"
#include "shiftrisk/dataset.hpp"
#include "shiftrisk/shift.hpp"
#include "shiftrisk/weather.hpp"

namespace shiftrisk {

/// empirical: historic residuals stay in the demand, capacity is the plain fleet distribution.
/// stochastic: demand is the central estimate, capacity is fleet + Gaussian residual.
enum class ResidualMode { empirical, stochastic };

std::string_view to_string(ResidualMode mode);
ResidualMode parse_residual_mode(std::string_view text);

struct RiskResult {
  std::string scenario_id;
  int winter_id = 0;
  ShiftSpec shift{};
  ResidualMode mode = ResidualMode::empirical;
  std::vector<double> per_day_lolp;
  double lole = 0.0;  // days per winter
  std::optional<double> lolh;  // hours per winter
  std::vector<double> per_hour_lolp;  // filled by lolh()
};

/// Daily-peak LOLE: sum over dates of P(X < d_t - w_t) (or P(X + mu < d-hat_t - w_t)).
/// `wind` must be the daily 18:00 wind aligned with the demand's weather shift.
RiskResult lole(const CapacityDistribution& dist, const ScenarioDemand& sd, const WindPowerSeries& wind,
                ResidualMode mode);

/// Hourly LOLH. Each hour's demand is the day's mapped/shifted peak plus the historic offset of
/// that hour from the historic daily peak. `wind_hourly` covers every winter hour. The daily
/// LOLE fields are filled as well, using the demand's own daily 18:00 wind.
RiskResult lolh(const CapacityDistribution& dist, const ScenarioDemand& sd, const WinterDataset& data,
                const WindPowerSeries& wind_hourly, ResidualMode mode);

/// Throws ContractError unless the distribution matches the residual mode.
void check_mode(const CapacityDistribution& dist, const ScenarioDemand& sd, ResidualMode mode);

}  // namespace shiftrisk
