#include <gtest/gtest.h>

#include <fstream>

#include "fixtures.hpp"
#include "shiftrisk/csv_io.hpp"
#include "shiftrisk/error.hpp"

using namespace shiftrisk;
using shiftrisk::testing::TempDir;

namespace {

// Writes a demand file and a weather file for one winter with simple closed-form values.
struct Files {
  std::filesystem::path demand;
  std::filesystem::path weather;
};

Files write_winter_files(const TempDir& dir, int winter, int lead, int trail) {
  Files f{dir / "demand.csv", dir / "weather.csv"};
  const Hour d0 = start_of(winter_start(winter));
  const long hours = static_cast<long>(winter_length(winter)) * 24;
  {
    std::ofstream out(f.demand);
    out << "timestamp,demand_mw\n";
    for (long i = 0; i < hours; ++i) out << format_hour(d0 + std::chrono::hours{i}) << ',' << 40000 + (i % 24) * 10 << '\n';
  }
  {
    std::ofstream out(f.weather);
    out << "timestamp,temp_c,wind_ms,cf_onshore,cf_offshore\n";
    const Hour w0 = d0 - std::chrono::hours{24L * lead};
    const long total = hours + 24L * (lead + trail);
    for (long i = 0; i < total; ++i) {
      out << format_hour(w0 + std::chrono::hours{i}) << ',' << 5.0 + 0.01 * (i % 100) << ',' << 4.5 << ',' << 0.3
          << ',' << 0.4 << '\n';
    }
  }
  return f;
}

void drop_line_containing(const std::filesystem::path& path, const std::string& needle) {
  const std::string text = shiftrisk::testing::read_file(path);
  std::ofstream out(path);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    const std::string line = text.substr(pos, end - pos);
    if (line.find(needle) == std::string::npos) out << line << '\n';
    pos = end + 1;
  }
}

void replace_in_file(const std::filesystem::path& path, const std::string& from, const std::string& to) {
  std::string text = shiftrisk::testing::read_file(path);
  const auto pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, from.size(), to);
  std::ofstream(path) << text;
}

}  // namespace

TEST(Ingest, LoadsWinter2010With151Days) {
  TempDir dir;
  const auto f = write_winter_files(dir, 2010, 31, 30);
  const auto data = load_winter(f.demand, f.weather, 2010);
  EXPECT_EQ(data.days(), 151U);
  EXPECT_EQ(data.lead_days, 31);
  EXPECT_EQ(data.trail_days, 30);
  EXPECT_EQ(data.hourly_demand.size(), 151U * 24);
  // Daily peak is the largest hour, here 23:00.
  EXPECT_DOUBLE_EQ(data.observed_peak_demand[0], 40230.0);
  EXPECT_DOUBLE_EQ(data.ws_at_peak(0), 4.5);
  EXPECT_DOUBLE_EQ(data.cf_onshore_at(-31, 0), 0.3);
  EXPECT_THROW(data.te_at_peak(-32), BoundsError);
  EXPECT_THROW(data.te_at_peak(151 + 30), BoundsError);
}

TEST(Ingest, MissingHourIsReportedAsGap) {
  TempDir dir;
  const auto f = write_winter_files(dir, 2010, 31, 30);
  drop_line_containing(f.weather, "2010-12-25T13:00");
  try {
    load_winter(f.demand, f.weather, 2010);
    FAIL() << "expected GapError";
  } catch (const GapError& e) {
    EXPECT_EQ(e.first_missing(), "2010-12-25T13:00");
    EXPECT_NE(std::string(e.what()).find("2010-12-25T13:00"), std::string::npos);
  }
}

TEST(Ingest, CapacityFactorAboveOneIsRejected) {
  TempDir dir;
  const auto f = write_winter_files(dir, 2010, 0, 0);
  replace_in_file(f.weather, "2010-11-03T05:00,5.53,4.5,0.3", "2010-11-03T05:00,5.53,4.5,1.3");
  EXPECT_THROW(load_winter(f.demand, f.weather, 2010), ValidationError);
}

TEST(Ingest, NonNumericCellNamesRowAndColumn) {
  TempDir dir;
  const auto f = write_winter_files(dir, 2010, 0, 0);
  replace_in_file(f.demand, "2010-11-01T02:00,40020", "2010-11-01T02:00,forty");
  try {
    load_winter(f.demand, f.weather, 2010);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 4U);
    EXPECT_EQ(e.column(), 2U);
  }
}

TEST(Ingest, WeatherNotCoveringWinterIsAlignmentError) {
  TempDir dir;
  const auto f = write_winter_files(dir, 2010, 0, 0);
  drop_line_containing(f.weather, "2011-03-31T");
  EXPECT_THROW(load_winter(f.demand, f.weather, 2010), AlignmentError);
}

TEST(Ingest, DemandForWrongWinterIsAlignmentError) {
  TempDir dir;
  const auto f = write_winter_files(dir, 2010, 0, 0);
  EXPECT_THROW(load_winter(f.demand, f.weather, 2011), AlignmentError);
}

TEST(Ingest, MissingFileAndBadHeader) {
  TempDir dir;
  EXPECT_THROW(load_winter(dir / "none.csv", dir / "none2.csv", 2010), InputError);
  const auto f = write_winter_files(dir, 2010, 0, 0);
  replace_in_file(f.demand, "timestamp,demand_mw", "time,demand");
  EXPECT_THROW(read_demand_csv(f.demand), ParseError);
}

TEST(Ingest, RoundTripReproducesDatasetExactly) {
  const auto& corpus = shiftrisk::testing::standard_corpus();
  TempDir dir;
  for (std::size_t i : {0U, 2U, 10U}) {
    const auto& w = corpus[i];
    write_winter(w, dir / "d.csv", dir / "w.csv");
    const auto back = load_winter(dir / "d.csv", dir / "w.csv", w.winter_id());
    EXPECT_EQ(back.calendar.dates, w.calendar.dates);
    EXPECT_EQ(back.calendar.dow, w.calendar.dow);
    EXPECT_EQ(back.lead_days, w.lead_days);
    EXPECT_EQ(back.trail_days, w.trail_days);
    EXPECT_EQ(back.observed_peak_demand, w.observed_peak_demand);
    EXPECT_EQ(back.hourly_demand, w.hourly_demand);
    EXPECT_EQ(back.te_padded, w.te_padded);
    EXPECT_EQ(back.weather.temperature.values, w.weather.temperature.values);
    EXPECT_EQ(back.weather.wind_speed.values, w.weather.wind_speed.values);
    EXPECT_EQ(back.weather.cf_onshore.values, w.weather.cf_onshore.values);
    EXPECT_EQ(back.weather.cf_offshore.values, w.weather.cf_offshore.values);
    EXPECT_EQ(back.weather.temperature.start, w.weather.temperature.start);
  }
}

TEST(Ingest, SeriesValidation) {
  HourlySeries s{parse_hour("2010-11-01T00:00"), std::vector<double>(23, 1.0), SeriesUnit::celsius};
  EXPECT_THROW(s.validate("short"), ValidationError);
  s.values.assign(24, 0.5);
  s.unit = SeriesUnit::capacity_factor;
  EXPECT_NO_THROW(s.validate("ok"));
  s.values[3] = -0.01;
  EXPECT_THROW(s.validate("negative"), ValidationError);
  s.values[3] = std::numeric_limits<double>::quiet_NaN();
  s.unit = SeriesUnit::celsius;
  EXPECT_THROW(s.validate("nan"), ValidationError);
}
