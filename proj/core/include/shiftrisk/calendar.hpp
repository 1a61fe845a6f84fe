#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace shiftrisk {

using Date = std::chrono::year_month_day;
using Hour = std::chrono::sys_time<std::chrono::hours>;

inline constexpr int kDaysPerWeek = 7;
inline constexpr int kHoursPerDay = 24;
// Daily peak demand and the weather regressors are read at 18:00.
inline constexpr int kPeakHour = 18;

// Day-of-week index m used throughout: 1 = Monday ... 7 = Sunday.
inline constexpr int kMonday = 1;
inline constexpr int kSaturday = 6;
inline constexpr int kSunday = 7;

/// Reduces any integer into the day-of-week range 1..7.
constexpr int wrap_dow(int m) noexcept {
  int r = (m - 1) % kDaysPerWeek;
  if (r < 0) r += kDaysPerWeek;
  return r + 1;
}

/// Reduces a day-of-week shift into -3..+3 (a shift of k is the same as k +/- 7).
constexpr int wrap_dow_shift(int k) noexcept {
  int r = ((k % kDaysPerWeek) + kDaysPerWeek) % kDaysPerWeek;
  return r > 3 ? r - kDaysPerWeek : r;
}

/// Daily calendar of winter i, which runs from 1 November of year i to 31 March of year i+1.
struct WinterCalendar {
  int winter_id = 0;
  std::vector<Date> dates;
  std::vector<int> dow;  // 1..7 per date
  std::vector<int> dsn;  // days since 1 November, 0-based

  std::size_t size() const noexcept { return dates.size(); }
};

Date winter_start(int winter_id);
Date winter_end(int winter_id);
int winter_length(int winter_id);

/// Calendar with an explicit weekday for 1 November (for counterfactual calendars).
WinterCalendar make_calendar(int winter_id, int dow_of_nov1);
/// Calendar using the real weekday of 1 November.
WinterCalendar make_calendar(int winter_id);

int iso_weekday(Date date);
Date add_days(Date date, int days);
int days_between(Date from, Date to);

std::string format_date(Date date);
std::string format_hour(Hour hour);
Date parse_date(std::string_view text);
/// Accepts YYYY-MM-DDTHH[:MM[:SS]][Z]; minutes and seconds must be zero.
Hour parse_hour(std::string_view text);

Hour start_of(Date date);
Date date_of(Hour hour);
int hour_of_day(Hour hour);

}  // namespace shiftrisk
