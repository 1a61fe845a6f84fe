#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shiftrisk/calendar.hpp"
#include "shiftrisk/error.hpp"

using namespace shiftrisk;
using namespace std::chrono;

TEST(Calendar, ExplicitNovemberWeekday) {
  const auto cal = make_calendar(2010, 2);
  ASSERT_EQ(cal.size(), 151U);
  const std::vector<int> want_dow{2, 3, 4, 5, 6, 7, 1, 2};
  for (std::size_t t = 0; t < want_dow.size(); ++t) {
    EXPECT_EQ(cal.dsn[t], static_cast<int>(t));
    EXPECT_EQ(cal.dow[t], want_dow[t]);
  }
}

TEST(Calendar, DsnOnFirstDecemberIs30) {
  const auto cal = make_calendar(2010);
  const Date dec1{year{2010}, December, day{1}};
  const auto it = std::find(cal.dates.begin(), cal.dates.end(), dec1);
  ASSERT_NE(it, cal.dates.end());
  EXPECT_EQ(cal.dsn[static_cast<std::size_t>(it - cal.dates.begin())], 30);
}

TEST(Calendar, RejectsOutOfRangeWeekday) {
  EXPECT_THROW(make_calendar(2010, 8), ContractError);
  EXPECT_THROW(make_calendar(2010, 0), ContractError);
}

TEST(Calendar, WindowLengthsMatchMonthArithmetic) {
  EXPECT_EQ(winter_length(2010), 151);
  EXPECT_EQ(winter_length(2011), 152);  // 29 Feb 2012
  for (int w = 1990; w <= 2060; ++w) EXPECT_EQ(winter_length(w), oracle::winter_days(w)) << w;
}

TEST(Calendar, RealWeekdays) {
  EXPECT_EQ(make_calendar(2010).dow.front(), kMonday);  // 1 Nov 2010
  EXPECT_EQ(make_calendar(2009).dow.front(), kSunday);  // 1 Nov 2009
  EXPECT_EQ(iso_weekday(Date{year{2019}, December, day{25}}), 3);
}

TEST(Calendar, InvariantsHoldForEveryWinter) {
  for (int w = 1990; w <= 2060; ++w) {
    const auto cal = make_calendar(w);
    EXPECT_EQ(cal.dates.front(), (Date{year{w}, November, day{1}}));
    EXPECT_EQ(cal.dates.back(), (Date{year{w + 1}, March, day{31}}));
    for (std::size_t t = 0; t + 1 < cal.size(); ++t) {
      ASSERT_EQ(cal.dow[t + 1], cal.dow[t] % 7 + 1);
      ASSERT_EQ(cal.dsn[t + 1], cal.dsn[t] + 1);
      ASSERT_LT(sys_days{cal.dates[t]}, sys_days{cal.dates[t + 1]});
      ASSERT_EQ(cal.dow[t], iso_weekday(cal.dates[t]));
    }
  }
}

TEST(Calendar, WrapHelpers) {
  EXPECT_EQ(wrap_dow(8), 1);
  EXPECT_EQ(wrap_dow(0), 7);
  EXPECT_EQ(wrap_dow(-6), 1);
  for (int k = -20; k <= 20; ++k) {
    EXPECT_EQ(wrap_dow_shift(k), wrap_dow_shift(k - 7));
    EXPECT_GE(wrap_dow_shift(k), -3);
    EXPECT_LE(wrap_dow_shift(k), 3);
  }
  EXPECT_EQ(wrap_dow_shift(4), -3);
  EXPECT_EQ(wrap_dow_shift(-4), 3);
}

TEST(Calendar, TimestampParsing) {
  const Hour h = parse_hour("2010-12-25T13:00");
  EXPECT_EQ(format_hour(h), "2010-12-25T13:00");
  EXPECT_EQ(parse_hour("2010-12-25T13:00:00Z"), h);
  EXPECT_EQ(hour_of_day(h), 13);
  EXPECT_EQ(date_of(h), (Date{year{2010}, December, day{25}}));
  EXPECT_THROW(parse_hour("2010-12-25T13:30"), std::invalid_argument);
  EXPECT_THROW(parse_hour("2010-12-25T24:00"), std::invalid_argument);
  EXPECT_THROW(parse_date("2011-02-29"), std::invalid_argument);
  EXPECT_EQ(format_date(parse_date("2012-02-29")), "2012-02-29");
  EXPECT_EQ(days_between(winter_start(2010), winter_end(2010)), 150);
  EXPECT_EQ(add_days(winter_start(2010), -31), (Date{year{2010}, October, day{1}}));
}
