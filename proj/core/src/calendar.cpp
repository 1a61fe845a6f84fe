#include "shiftrisk/calendar.hpp"

#include <cstdio>
#include <stdexcept>

#include "shiftrisk/error.hpp"
#include "shiftrisk/number_format.hpp"

namespace shiftrisk {

using std::chrono::days;
using std::chrono::sys_days;

Date winter_start(int winter_id) {
  return Date{std::chrono::year{winter_id}, std::chrono::November, std::chrono::day{1}};
}

Date winter_end(int winter_id) {
  return Date{std::chrono::year{winter_id + 1}, std::chrono::March, std::chrono::day{31}};
}

int winter_length(int winter_id) { return days_between(winter_start(winter_id), winter_end(winter_id)) + 1; }

WinterCalendar make_calendar(int winter_id, int dow_of_nov1) {
  if (dow_of_nov1 < 1 || dow_of_nov1 > kDaysPerWeek) {
    throw ContractError("make_calendar: dow_of_nov1 must be in 1..7, got " + std::to_string(dow_of_nov1));
  }
  WinterCalendar cal;
  cal.winter_id = winter_id;
  const int n = winter_length(winter_id);
  cal.dates.reserve(n);
  cal.dow.reserve(n);
  cal.dsn.reserve(n);
  const sys_days first{winter_start(winter_id)};
  for (int t = 0; t < n; ++t) {
    cal.dates.emplace_back(first + days{t});
    cal.dow.push_back(wrap_dow(dow_of_nov1 + t));
    cal.dsn.push_back(t);
  }
  return cal;
}

WinterCalendar make_calendar(int winter_id) { return make_calendar(winter_id, iso_weekday(winter_start(winter_id))); }

int iso_weekday(Date date) { return static_cast<int>(std::chrono::weekday{sys_days{date}}.iso_encoding()); }

Date add_days(Date date, int n) { return Date{sys_days{date} + days{n}}; }

int days_between(Date from, Date to) { return static_cast<int>((sys_days{to} - sys_days{from}).count()); }

std::string format_date(Date date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::string format_hour(Hour hour) {
  char buf[24];
  const Date d = date_of(hour);
  std::snprintf(buf, sizeof buf, "%sT%02d:00", format_date(d).c_str(), hour_of_day(hour));
  return buf;
}

namespace {

int field(std::string_view text, std::size_t pos, std::size_t len) {
  if (pos + len > text.size()) throw std::invalid_argument("truncated");
  return static_cast<int>(parse_integer(text.substr(pos, len)));
}

void expect(std::string_view text, std::size_t pos, char c) {
  if (pos >= text.size() || text[pos] != c) throw std::invalid_argument("unexpected character");
}

}  // namespace

Date parse_date(std::string_view text) {
  try {
    if (text.size() != 10) throw std::invalid_argument("length");
    expect(text, 4, '-');
    expect(text, 7, '-');
    const Date d{std::chrono::year{field(text, 0, 4)}, std::chrono::month{static_cast<unsigned>(field(text, 5, 2))},
                 std::chrono::day{static_cast<unsigned>(field(text, 8, 2))}};
    if (!d.ok()) throw std::invalid_argument("invalid calendar date");
    return d;
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad date '" + std::string(text) + "': " + e.what());
  }
}

Hour parse_hour(std::string_view text) {
  try {
    if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);
    if (text.size() < 13) throw std::invalid_argument("too short");
    const Date d = parse_date(text.substr(0, 10));
    if (text[10] != 'T' && text[10] != ' ') throw std::invalid_argument("missing 'T'");
    const int hh = field(text, 11, 2);
    if (hh < 0 || hh > 23) throw std::invalid_argument("hour out of range");
    std::size_t pos = 13;
    for (int part = 0; part < 2 && pos < text.size(); ++part) {
      expect(text, pos, ':');
      if (field(text, pos + 1, 2) != 0) throw std::invalid_argument("timestamps must be on the hour");
      pos += 3;
    }
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return start_of(d) + std::chrono::hours{hh};
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad timestamp '" + std::string(text) + "': " + e.what());
  }
}

Hour start_of(Date date) { return Hour{sys_days{date}}; }

Date date_of(Hour hour) { return Date{std::chrono::floor<days>(hour)}; }

int hour_of_day(Hour hour) {
  return static_cast<int>((hour - std::chrono::floor<days>(hour)).count());
}

}  // namespace shiftrisk
