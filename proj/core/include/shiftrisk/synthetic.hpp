#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftrisk/calendar.hpp"
#include "shiftrisk/dataset.hpp"
#include "shiftrisk/demand_model.hpp"

namespace shiftrisk {

/// A planted weather excursion: `delta_c` is added to every hour of `length_days` days
/// starting at `start`, and wind speed is multiplied by `wind_scale` over the same days.
struct ColdSpell {
  Date start{};
  int length_days = 1;
  double delta_c = 0.0;
  double wind_scale = 1.0;
};

/// Demand suppression applied through the residuals on an annual date range that may wrap
/// the year end (e.g. 20 Dec - 3 Jan).
struct ResidualDip {
  unsigned start_month = 12;
  unsigned start_day = 20;
  unsigned end_month = 1;
  unsigned end_day = 3;
  double suppression_mw = 0.0;

  bool contains(Date date) const;
};

struct SyntheticWeather {
  double mean_temp_c = 4.0;          // seasonal base at the cold point
  double seasonal_amplitude_c = 6.0;  // warmer by this much half a year away
  double diurnal_amplitude_c = 2.0;
  double anomaly_sd_c = 3.0;          // day-to-day AR(1) anomaly
  double anomaly_persistence = 0.75;
  double hourly_noise_c = 0.3;
  double wind_mean_ms = 4.5;
  double wind_anomaly_sd_ms = 1.5;
  double wind_persistence = 0.6;
  double wind_hourly_noise_ms = 0.3;
  double onshore_speed_factor = 1.9;  // hub-height speed relative to the 10 m index
  double offshore_speed_factor = 2.3;
};

struct SynthSpec {
  int first_winter = 2009;
  CoefficientSet true_coefficients = reference_coefficients();
  double residual_sd = 0.0;  // MW
  std::vector<ColdSpell> cold_spells;
  std::optional<ResidualDip> christmas_dip;
  std::uint64_t rng_seed = 0;
  int lead_days = 31;   // weather from 1 October
  int trail_days = 30;  // weather to 30 April
  SyntheticWeather weather;
  bool hourly_demand = true;

  void validate(int n_winters) const;
};

/// Builds `n_winters` consecutive winters from `spec.first_winter`. Demand follows the
/// regression formula with `spec.true_coefficients`, Gaussian residuals of SD `residual_sd`,
/// and the Christmas dip added to the residuals. With the same spec the output is identical.
std::vector<WinterDataset> generate_synthetic(const SynthSpec& spec, int n_winters);

/// Idealised onshore/offshore power curve used by the generator (cut-in 3, rated 12, cut-out 25 m/s).
double synthetic_capacity_factor(double hub_speed_ms);

/// Fixed additive-fraction daily shape: hour h demand is peak * (1 - shape[h]), shape[18] = 0.
const std::array<double, 24>& synthetic_daily_shape();

SynthSpec parse_synth_spec_json(std::string_view text, std::string_view source = "synth spec");
std::string synth_spec_to_json(const SynthSpec& spec);

}  // namespace shiftrisk
