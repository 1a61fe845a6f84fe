#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "shiftrisk/calendar.hpp"

namespace shiftrisk {

enum class SeriesUnit { celsius, metres_per_second, megawatts, capacity_factor };

/// Contiguous hourly samples starting at `start`.
struct HourlySeries {
  Hour start{};
  std::vector<double> values;
  SeriesUnit unit = SeriesUnit::megawatts;

  std::size_t size() const noexcept { return values.size(); }
  Hour time_at(std::size_t i) const { return start + std::chrono::hours{static_cast<long>(i)}; }
  Hour last() const { return time_at(values.size() - 1); }

  /// Throws ValidationError if shorter than a day, non-finite, or a capacity factor outside [0,1].
  void validate(std::string_view name) const;
};

/// The four hourly weather inputs. They share a start hour and a length.
struct WeatherHourly {
  HourlySeries temperature;  // population-weighted, degC
  HourlySeries wind_speed;   // population-weighted 10 m, m/s
  HourlySeries cf_onshore;
  HourlySeries cf_offshore;
};

/// One winter of aligned daily records plus the hourly series behind them.
///
/// Weather is held over a padded window `lead_days` before 1 November through `trail_days`
/// after 31 March so that weather shifts have real data to draw on. Day indices passed to
/// the accessors are relative to 1 November and may be negative inside the padding.
struct WinterDataset {
  WinterCalendar calendar;
  int lead_days = 0;
  int trail_days = 0;
  WeatherHourly weather;
  std::vector<double> te_padded;  // effective temperature at 18:00, per padded day
  std::vector<double> observed_peak_demand;  // MW, per winter date
  std::vector<double> hourly_demand;  // MW, 24 per winter date; empty when not loaded

  int winter_id() const noexcept { return calendar.winter_id; }
  std::size_t days() const noexcept { return calendar.size(); }
  std::size_t padded_days() const noexcept { return calendar.size() + lead_days + trail_days; }
  bool has_hourly_demand() const noexcept { return !hourly_demand.empty(); }

  /// True if day index `day` (relative to 1 November) lies inside the loaded weather.
  bool has_weather_day(long day) const noexcept { return day >= -lead_days && day < static_cast<long>(days()) + trail_days; }

  double te_at_peak(long day) const;
  double ws_at_peak(long day) const;
  /// Hourly weather sample at `hour` (0..23) of `day`.
  double cf_onshore_at(long day, int hour) const;
  double cf_offshore_at(long day, int hour) const;

  /// Winter-window views (length days()).
  std::vector<double> te_at_peak_series() const;
  std::vector<double> ws_at_peak_series() const;

  void validate() const;

 private:
  std::size_t hourly_index(long day, int hour) const;
};

/// Builds a dataset from hourly weather covering at least the winter window and hourly
/// demand covering it. Daily observed peak demand is the maximum over each day's hours.
WinterDataset assemble_dataset(int winter_id, WeatherHourly weather, HourlySeries demand);

/// Variant for callers that only have daily peak demand (no LOLH possible).
WinterDataset assemble_dataset(int winter_id, WeatherHourly weather, std::vector<double> daily_peak_demand);

}  // namespace shiftrisk
