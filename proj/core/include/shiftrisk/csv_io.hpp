#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "shiftrisk/dataset.hpp"

namespace shiftrisk {

/// Rows of a comma-separated file whose header matched exactly. `lines[i]` is the 1-based
/// line number of `rows[i]` for error messages.
struct CsvDocument {
  std::string source;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;
};

CsvDocument read_csv(const std::filesystem::path& path, const std::vector<std::string>& header);

/// Demand CSV: `timestamp,demand_mw`, hourly ISO-8601 timestamps.
HourlySeries read_demand_csv(const std::filesystem::path& path);
/// Weather CSV: `timestamp,temp_c,wind_ms,cf_onshore,cf_offshore`.
WeatherHourly read_weather_csv(const std::filesystem::path& path);

/// Loads one winter. The demand file must cover 1 Nov - 31 Mar hourly; the weather file
/// must cover at least that and may extend either side (that extension is the shift padding).
WinterDataset load_winter(const std::filesystem::path& demand_file, const std::filesystem::path& weather_file,
                          int winter_id);

void write_demand_csv(const std::filesystem::path& path, const HourlySeries& demand);
void write_weather_csv(const std::filesystem::path& path, const WeatherHourly& weather);
/// Writes a dataset back out in the two ingest formats; reloading reproduces it exactly.
void write_winter(const WinterDataset& data, const std::filesystem::path& demand_file,
                  const std::filesystem::path& weather_file);

}  // namespace shiftrisk
