#include "shiftrisk/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "json_detail.hpp"
#include "shiftrisk/error.hpp"

namespace shiftrisk {

bool ResidualDip::contains(Date date) const {
  const unsigned m = static_cast<unsigned>(date.month());
  const unsigned d = static_cast<unsigned>(date.day());
  const unsigned key = m * 100 + d;
  const unsigned lo = start_month * 100 + start_day;
  const unsigned hi = end_month * 100 + end_day;
  return lo <= hi ? (key >= lo && key <= hi) : (key >= lo || key <= hi);
}

double synthetic_capacity_factor(double v) {
  constexpr double cut_in = 3.0, rated = 12.0, cut_out = 25.0;
  if (v < cut_in || v >= cut_out) return 0.0;
  if (v >= rated) return 1.0;
  const double num = v * v * v - cut_in * cut_in * cut_in;
  const double den = rated * rated * rated - cut_in * cut_in * cut_in;
  return num / den;
}

const std::array<double, 24>& synthetic_daily_shape() {
  static const std::array<double, 24> shape{0.30, 0.34, 0.37, 0.39, 0.40, 0.38, 0.30, 0.18, 0.10, 0.09, 0.10, 0.11,
                                            0.12, 0.13, 0.13, 0.11, 0.07, 0.02, 0.00, 0.02, 0.06, 0.11, 0.17, 0.24};
  return shape;
}

void SynthSpec::validate(int n_winters) const {
  if (n_winters < 1) throw ContractError("generate_synthetic: n_winters must be >= 1");
  if (residual_sd < 0.0) throw ContractError("generate_synthetic: residual_sd must be >= 0");
  if (lead_days < 0 || trail_days < 0) throw ContractError("generate_synthetic: padding must be >= 0");
  for (const auto& spell : cold_spells) {
    if (spell.length_days < 1) throw ContractError("generate_synthetic: cold spell length must be >= 1 day");
    bool inside = false;
    for (int i = 0; i < n_winters; ++i) {
      const int w = first_winter + i;
      const Date last = add_days(spell.start, spell.length_days - 1);
      if (days_between(winter_start(w), spell.start) >= 0 && days_between(last, winter_end(w)) >= 0) inside = true;
    }
    if (!inside) {
      throw ContractError("generate_synthetic: cold spell starting " + format_date(spell.start) +
                          " lies outside the generated winter windows");
    }
  }
}

namespace {

double seasonal_temperature(const SyntheticWeather& wx, Date date) {
  // Coldest around 20 January.
  const int year = static_cast<int>(date.year());
  const Date anchor{std::chrono::year{static_cast<unsigned>(date.month()) >= 7U ? year + 1 : year}, std::chrono::January,
                    std::chrono::day{20}};
  const double phase = 2.0 * std::numbers::pi * days_between(anchor, date) / 365.25;
  return wx.mean_temp_c + wx.seasonal_amplitude_c * 0.5 * (1.0 - std::cos(phase));
}

WinterDataset generate_winter(const SynthSpec& spec, int winter_id) {
  const SyntheticWeather& wx = spec.weather;
  std::seed_seq seq{static_cast<std::uint32_t>(spec.rng_seed & 0xffffffffU), static_cast<std::uint32_t>(spec.rng_seed >> 32),
                    static_cast<std::uint32_t>(winter_id)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> z(0.0, 1.0);

  const Date first = add_days(winter_start(winter_id), -spec.lead_days);
  const int n_days = winter_length(winter_id) + spec.lead_days + spec.trail_days;
  const std::size_t n_hours = static_cast<std::size_t>(n_days) * kHoursPerDay;

  WeatherHourly w;
  w.temperature = {start_of(first), std::vector<double>(n_hours), SeriesUnit::celsius};
  w.wind_speed = {start_of(first), std::vector<double>(n_hours), SeriesUnit::metres_per_second};
  w.cf_onshore = {start_of(first), std::vector<double>(n_hours), SeriesUnit::capacity_factor};
  w.cf_offshore = {start_of(first), std::vector<double>(n_hours), SeriesUnit::capacity_factor};

  double temp_anom = wx.anomaly_sd_c * z(rng);
  double wind_anom = wx.wind_anomaly_sd_ms * z(rng);
  const double temp_innov = wx.anomaly_sd_c * std::sqrt(1.0 - wx.anomaly_persistence * wx.anomaly_persistence);
  const double wind_innov = wx.wind_anomaly_sd_ms * std::sqrt(1.0 - wx.wind_persistence * wx.wind_persistence);
  for (int d = 0; d < n_days; ++d) {
    const Date date = add_days(first, d);
    if (d > 0) {
      temp_anom = wx.anomaly_persistence * temp_anom + temp_innov * z(rng);
      wind_anom = wx.wind_persistence * wind_anom + wind_innov * z(rng);
    }
    double delta = 0.0;
    double wind_scale = 1.0;
    for (const auto& spell : spec.cold_spells) {
      const int offset = days_between(spell.start, date);
      if (offset >= 0 && offset < spell.length_days) {
        delta += spell.delta_c;
        wind_scale *= spell.wind_scale;
      }
    }
    const double base = seasonal_temperature(wx, date);
    for (int h = 0; h < kHoursPerDay; ++h) {
      const std::size_t i = static_cast<std::size_t>(d) * kHoursPerDay + h;
      const double diurnal = wx.diurnal_amplitude_c * std::sin(2.0 * std::numbers::pi * (h - 9) / 24.0);
      w.temperature.values[i] = base + diurnal + temp_anom + delta + wx.hourly_noise_c * z(rng);
      const double ws = std::max(0.2, (wx.wind_mean_ms + wind_anom + wx.wind_hourly_noise_ms * z(rng)) * wind_scale);
      w.wind_speed.values[i] = ws;
      w.cf_onshore.values[i] = synthetic_capacity_factor(ws * wx.onshore_speed_factor);
      w.cf_offshore.values[i] = synthetic_capacity_factor(ws * wx.offshore_speed_factor);
    }
  }

  // Regression covariates come from the same TE/WS extraction the loader uses.
  WinterDataset shell = assemble_dataset(winter_id, w, std::vector<double>(winter_length(winter_id), 1.0));
  const std::size_t n = shell.days();
  std::vector<double> peak(n);
  for (std::size_t t = 0; t < n; ++t) {
    const long day = static_cast<long>(t);
    double residual = spec.residual_sd > 0.0 ? spec.residual_sd * z(rng) : 0.0;
    if (spec.christmas_dip && spec.christmas_dip->contains(shell.calendar.dates[t])) {
      residual -= spec.christmas_dip->suppression_mw;
    }
    const CoefficientSet& c = spec.true_coefficients;
    const double dsn = static_cast<double>(shell.calendar.dsn[t]);
    peak[t] = c.alpha + c.lambda1 * shell.te_at_peak(day) + c.beta1 * dsn + c.beta2 * dsn * dsn +
              c.dow_effect(shell.calendar.dow[t]) + c.gamma1 * shell.ws_at_peak(day) +
              (c.phi.count(winter_id) ? c.phi.at(winter_id) : 0.0) + residual;
    if (!(peak[t] > 0.0)) {
      throw ValidationError("generate_synthetic: non-positive demand in winter " + std::to_string(winter_id));
    }
  }
  if (!spec.hourly_demand) {
    return assemble_dataset(winter_id, std::move(w), std::move(peak));
  }
  const auto& shape = synthetic_daily_shape();
  HourlySeries demand{start_of(winter_start(winter_id)), std::vector<double>(n * kHoursPerDay), SeriesUnit::megawatts};
  for (std::size_t t = 0; t < n; ++t) {
    for (int h = 0; h < kHoursPerDay; ++h) demand.values[t * kHoursPerDay + h] = peak[t] * (1.0 - shape[h]);
  }
  return assemble_dataset(winter_id, std::move(w), std::move(demand));
}

}  // namespace

std::vector<WinterDataset> generate_synthetic(const SynthSpec& spec, int n_winters) {
  spec.validate(n_winters);
  std::vector<WinterDataset> out;
  out.reserve(static_cast<std::size_t>(n_winters));
  for (int i = 0; i < n_winters; ++i) out.push_back(generate_winter(spec, spec.first_winter + i));
  return out;
}

namespace {

std::pair<unsigned, unsigned> parse_month_day(const std::string& s) {
  if (s.size() != 5 || s[2] != '-') throw std::invalid_argument("expected MM-DD, got '" + s + "'");
  return {static_cast<unsigned>(std::stoi(s.substr(0, 2))), static_cast<unsigned>(std::stoi(s.substr(3, 2)))};
}

std::string month_day(unsigned m, unsigned d) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02u-%02u", m, d);
  return buf;
}

}  // namespace

SynthSpec parse_synth_spec_json(std::string_view text, std::string_view source) {
  try {
    const auto j = nlohmann::json::parse(text);
    SynthSpec s;
    s.first_winter = j.value("first_winter", s.first_winter);
    if (j.contains("coefficients")) s.true_coefficients = detail::coefficients_from_value(j["coefficients"]);
    s.residual_sd = j.value("residual_sd_mw", s.residual_sd);
    s.rng_seed = j.value("rng_seed", s.rng_seed);
    s.lead_days = j.value("lead_days", s.lead_days);
    s.trail_days = j.value("trail_days", s.trail_days);
    s.hourly_demand = j.value("hourly_demand", s.hourly_demand);
    for (const auto& c : j.value("cold_spells", nlohmann::json::array())) {
      ColdSpell spell;
      spell.start = parse_date(c.at("start").get<std::string>());
      spell.length_days = c.at("length_days").get<int>();
      spell.delta_c = c.at("delta_c").get<double>();
      spell.wind_scale = c.value("wind_scale", 1.0);
      s.cold_spells.push_back(spell);
    }
    if (j.contains("christmas_dip") && !j["christmas_dip"].is_null()) {
      const auto& d = j["christmas_dip"];
      ResidualDip dip;
      std::tie(dip.start_month, dip.start_day) = parse_month_day(d.value("start", std::string("12-20")));
      std::tie(dip.end_month, dip.end_day) = parse_month_day(d.value("end", std::string("01-03")));
      dip.suppression_mw = d.at("suppression_mw").get<double>();
      s.christmas_dip = dip;
    }
    if (j.contains("weather")) {
      const auto& wj = j["weather"];
      auto& wx = s.weather;
      wx.mean_temp_c = wj.value("mean_temp_c", wx.mean_temp_c);
      wx.seasonal_amplitude_c = wj.value("seasonal_amplitude_c", wx.seasonal_amplitude_c);
      wx.diurnal_amplitude_c = wj.value("diurnal_amplitude_c", wx.diurnal_amplitude_c);
      wx.anomaly_sd_c = wj.value("anomaly_sd_c", wx.anomaly_sd_c);
      wx.anomaly_persistence = wj.value("anomaly_persistence", wx.anomaly_persistence);
      wx.hourly_noise_c = wj.value("hourly_noise_c", wx.hourly_noise_c);
      wx.wind_mean_ms = wj.value("wind_mean_ms", wx.wind_mean_ms);
      wx.wind_anomaly_sd_ms = wj.value("wind_anomaly_sd_ms", wx.wind_anomaly_sd_ms);
      wx.wind_persistence = wj.value("wind_persistence", wx.wind_persistence);
      wx.wind_hourly_noise_ms = wj.value("wind_hourly_noise_ms", wx.wind_hourly_noise_ms);
      wx.onshore_speed_factor = wj.value("onshore_speed_factor", wx.onshore_speed_factor);
      wx.offshore_speed_factor = wj.value("offshore_speed_factor", wx.offshore_speed_factor);
    }
    return s;
  } catch (const std::exception& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

std::string synth_spec_to_json(const SynthSpec& s) {
  nlohmann::json spells = nlohmann::json::array();
  for (const auto& c : s.cold_spells) {
    spells.push_back({{"start", format_date(c.start)},
                      {"length_days", c.length_days},
                      {"delta_c", c.delta_c},
                      {"wind_scale", c.wind_scale}});
  }
  const auto& wx = s.weather;
  nlohmann::json j{{"first_winter", s.first_winter},
                   {"coefficients", detail::coefficients_value(s.true_coefficients)},
                   {"residual_sd_mw", s.residual_sd},
                   {"rng_seed", s.rng_seed},
                   {"lead_days", s.lead_days},
                   {"trail_days", s.trail_days},
                   {"hourly_demand", s.hourly_demand},
                   {"cold_spells", spells},
                   {"weather",
                    {{"mean_temp_c", wx.mean_temp_c},
                     {"seasonal_amplitude_c", wx.seasonal_amplitude_c},
                     {"diurnal_amplitude_c", wx.diurnal_amplitude_c},
                     {"anomaly_sd_c", wx.anomaly_sd_c},
                     {"anomaly_persistence", wx.anomaly_persistence},
                     {"hourly_noise_c", wx.hourly_noise_c},
                     {"wind_mean_ms", wx.wind_mean_ms},
                     {"wind_anomaly_sd_ms", wx.wind_anomaly_sd_ms},
                     {"wind_persistence", wx.wind_persistence},
                     {"wind_hourly_noise_ms", wx.wind_hourly_noise_ms},
                     {"onshore_speed_factor", wx.onshore_speed_factor},
                     {"offshore_speed_factor", wx.offshore_speed_factor}}}};
  if (s.christmas_dip) {
    const auto& d = *s.christmas_dip;
    j["christmas_dip"] = {{"start", month_day(d.start_month, d.start_day)},
                          {"end", month_day(d.end_month, d.end_day)},
                          {"suppression_mw", d.suppression_mw}};
  } else {
    j["christmas_dip"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace shiftrisk
