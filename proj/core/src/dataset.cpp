#include "shiftrisk/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shiftrisk/error.hpp"
#include "shiftrisk/weather.hpp"

namespace shiftrisk {

void HourlySeries::validate(std::string_view name) const {
  const std::string label(name);
  if (values.size() < static_cast<std::size_t>(kHoursPerDay)) {
    throw ValidationError(label + ": series shorter than 24 hours");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw ValidationError(label + ": non-finite value at " + format_hour(time_at(i)));
    }
    if (unit == SeriesUnit::capacity_factor && (v < 0.0 || v > 1.0)) {
      throw ValidationError(label + ": capacity factor " + std::to_string(v) + " outside [0,1] at " +
                            format_hour(time_at(i)));
    }
  }
}

std::size_t WinterDataset::hourly_index(long day, int hour) const {
  if (!has_weather_day(day) || hour < 0 || hour >= kHoursPerDay) {
    throw BoundsError("winter " + std::to_string(winter_id()) + ": day " + std::to_string(day) +
                      " is outside the loaded weather (" + std::to_string(lead_days) + " days before, " +
                      std::to_string(trail_days) + " days after the winter window)");
  }
  return static_cast<std::size_t>(day + lead_days) * kHoursPerDay + static_cast<std::size_t>(hour);
}

double WinterDataset::te_at_peak(long day) const {
  return te_padded[hourly_index(day, kPeakHour) / kHoursPerDay];
}

double WinterDataset::ws_at_peak(long day) const { return weather.wind_speed.values[hourly_index(day, kPeakHour)]; }

double WinterDataset::cf_onshore_at(long day, int hour) const {
  return weather.cf_onshore.values[hourly_index(day, hour)];
}

double WinterDataset::cf_offshore_at(long day, int hour) const {
  return weather.cf_offshore.values[hourly_index(day, hour)];
}

std::vector<double> WinterDataset::te_at_peak_series() const {
  return {te_padded.begin() + lead_days, te_padded.begin() + lead_days + static_cast<long>(days())};
}

std::vector<double> WinterDataset::ws_at_peak_series() const {
  std::vector<double> out(days());
  for (std::size_t t = 0; t < days(); ++t) out[t] = ws_at_peak(static_cast<long>(t));
  return out;
}

void WinterDataset::validate() const {
  const std::string label = "winter " + std::to_string(winter_id());
  const std::size_t n = days();
  if (n == 0) throw ValidationError(label + ": empty calendar");
  for (std::size_t t = 1; t < n; ++t) {
    if (calendar.dow[t] != calendar.dow[t - 1] % kDaysPerWeek + 1 || calendar.dsn[t] != calendar.dsn[t - 1] + 1) {
      throw ValidationError(label + ": calendar does not advance one day at a time");
    }
  }
  if (observed_peak_demand.size() != n) throw ValidationError(label + ": observed demand length mismatch");
  if (te_padded.size() != padded_days()) throw ValidationError(label + ": effective temperature length mismatch");
  for (double te : te_padded) {
    if (!std::isfinite(te)) throw ValidationError(label + ": non-finite effective temperature");
  }
  for (double d : observed_peak_demand) {
    if (!(d > 0.0) || !std::isfinite(d)) throw ValidationError(label + ": observed peak demand must be positive");
  }
  if (!hourly_demand.empty() && hourly_demand.size() != n * kHoursPerDay) {
    throw ValidationError(label + ": hourly demand length mismatch");
  }
  const std::size_t hours = padded_days() * kHoursPerDay;
  for (const HourlySeries* s : {&weather.temperature, &weather.wind_speed, &weather.cf_onshore, &weather.cf_offshore}) {
    if (s->size() != hours) throw ValidationError(label + ": weather length mismatch");
  }
}

namespace {

// Checks the weather series agree with each other and span whole days around the winter.
void place_weather(int winter_id, WeatherHourly& weather, WinterDataset& out) {
  const auto& ref = weather.temperature;
  for (const HourlySeries* s : {&weather.wind_speed, &weather.cf_onshore, &weather.cf_offshore}) {
    if (s->start != ref.start || s->size() != ref.size()) {
      throw AlignmentError("winter " + std::to_string(winter_id) + ": weather series are not aligned");
    }
  }
  weather.temperature.unit = SeriesUnit::celsius;
  weather.wind_speed.unit = SeriesUnit::metres_per_second;
  weather.cf_onshore.unit = weather.cf_offshore.unit = SeriesUnit::capacity_factor;
  weather.temperature.validate("temp_c");
  weather.wind_speed.validate("wind_ms");
  weather.cf_onshore.validate("cf_onshore");
  weather.cf_offshore.validate("cf_offshore");

  if (hour_of_day(ref.start) != 0 || ref.size() % kHoursPerDay != 0) {
    throw AlignmentError("winter " + std::to_string(winter_id) + ": weather must cover whole days from 00:00 to 23:00");
  }
  const Hour window_start = start_of(winter_start(winter_id));
  const Hour window_last = start_of(winter_end(winter_id)) + std::chrono::hours{23};
  if (ref.start > window_start || ref.last() < window_last) {
    throw AlignmentError("winter " + std::to_string(winter_id) + ": weather covers " + format_hour(ref.start) + " to " +
                         format_hour(ref.last()) + " but must cover " + format_hour(window_start) + " to " +
                         format_hour(window_last));
  }
  out.lead_days = days_between(date_of(ref.start), winter_start(winter_id));
  out.trail_days = days_between(winter_end(winter_id), date_of(ref.last()));
  if (ref.size() < 2 * static_cast<std::size_t>(kHoursPerDay)) {
    throw ValidationError("winter " + std::to_string(winter_id) + ": weather shorter than 48 hours");
  }
  out.te_padded = effective_temperature(weather.temperature).daily_te_at_peak;
  out.weather = std::move(weather);
}

}  // namespace

WinterDataset assemble_dataset(int winter_id, WeatherHourly weather, HourlySeries demand) {
  WinterDataset out;
  out.calendar = make_calendar(winter_id);
  place_weather(winter_id, weather, out);
  const std::size_t n = out.days();
  {
    demand.unit = SeriesUnit::megawatts;
    demand.validate("demand_mw");
    const Hour window_start = start_of(winter_start(winter_id));
    if (demand.start > window_start || demand.last() < window_start + std::chrono::hours{n * kHoursPerDay - 1}) {
      throw AlignmentError("winter " + std::to_string(winter_id) + ": demand covers " + format_hour(demand.start) +
                           " to " + format_hour(demand.last()) + " but must cover the winter window from " +
                           format_hour(window_start));
    }
    const auto offset = static_cast<std::size_t>((window_start - demand.start).count());
    out.hourly_demand.assign(demand.values.begin() + offset, demand.values.begin() + offset + n * kHoursPerDay);
    out.observed_peak_demand.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
      auto first = out.hourly_demand.begin() + t * kHoursPerDay;
      out.observed_peak_demand[t] = *std::max_element(first, first + kHoursPerDay);
    }
  }
  out.validate();
  return out;
}

WinterDataset assemble_dataset(int winter_id, WeatherHourly weather, std::vector<double> daily_peak_demand) {
  WinterDataset out;
  out.calendar = make_calendar(winter_id);
  place_weather(winter_id, weather, out);
  if (daily_peak_demand.size() != out.days()) {
    throw AlignmentError("winter " + std::to_string(winter_id) + ": expected " + std::to_string(out.days()) +
                         " daily peaks, got " + std::to_string(daily_peak_demand.size()));
  }
  out.observed_peak_demand = std::move(daily_peak_demand);
  out.validate();
  return out;
}

}  // namespace shiftrisk
