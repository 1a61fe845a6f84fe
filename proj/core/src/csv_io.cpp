#include "shiftrisk/csv_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "shiftrisk/error.hpp"
#include "shiftrisk/number_format.hpp"

namespace shiftrisk {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

struct TimedColumns {
  Hour start{};
  std::vector<std::vector<double>> columns;
};

// Parses the timestamp column plus numeric columns, checking the hours are contiguous.
TimedColumns parse_timed(const CsvDocument& doc, std::size_t n_values) {
  TimedColumns out;
  out.columns.assign(n_values, {});
  if (doc.rows.empty()) throw InputError(doc.source + ": no data rows");
  Hour expected{};
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const auto& row = doc.rows[r];
    Hour ts;
    try {
      ts = parse_hour(strip(row[0]));
    } catch (const std::invalid_argument& e) {
      throw ParseError(doc.source, doc.lines[r], 1, e.what());
    }
    if (r == 0) {
      out.start = ts;
    } else if (ts > expected) {
      throw GapError(doc.source, format_hour(expected));
    } else if (ts < expected) {
      throw ParseError(doc.source, doc.lines[r], 1, "timestamp " + format_hour(ts) + " is not increasing");
    }
    expected = ts + std::chrono::hours{1};
    for (std::size_t c = 0; c < n_values; ++c) {
      try {
        out.columns[c].push_back(parse_double(row[c + 1]));
      } catch (const std::invalid_argument& e) {
        throw ParseError(doc.source, doc.lines[r], c + 2, e.what());
      }
    }
  }
  return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace

CsvDocument read_csv(const std::filesystem::path& path, const std::vector<std::string>& header) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  CsvDocument doc;
  doc.source = path.string();
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty()) continue;
    auto fields = split(line);
    if (!have_header) {
      for (auto& f : fields) f = strip(f);
      if (fields != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        throw ParseError(doc.source, line_no, 1, "expected header '" + want + "'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw ParseError(doc.source, line_no, std::min(fields.size(), header.size()) + 1,
                       "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    }
    doc.rows.push_back(std::move(fields));
    doc.lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(doc.source, 1, 1, "empty file");
  return doc;
}

HourlySeries read_demand_csv(const std::filesystem::path& path) {
  auto parsed = parse_timed(read_csv(path, {"timestamp", "demand_mw"}), 1);
  HourlySeries s{parsed.start, std::move(parsed.columns[0]), SeriesUnit::megawatts};
  s.validate(path.string());
  return s;
}

WeatherHourly read_weather_csv(const std::filesystem::path& path) {
  auto parsed = parse_timed(read_csv(path, {"timestamp", "temp_c", "wind_ms", "cf_onshore", "cf_offshore"}), 4);
  WeatherHourly w;
  w.temperature = {parsed.start, std::move(parsed.columns[0]), SeriesUnit::celsius};
  w.wind_speed = {parsed.start, std::move(parsed.columns[1]), SeriesUnit::metres_per_second};
  w.cf_onshore = {parsed.start, std::move(parsed.columns[2]), SeriesUnit::capacity_factor};
  w.cf_offshore = {parsed.start, std::move(parsed.columns[3]), SeriesUnit::capacity_factor};
  const std::string src = path.string();
  w.temperature.validate(src + " temp_c");
  w.wind_speed.validate(src + " wind_ms");
  w.cf_onshore.validate(src + " cf_onshore");
  w.cf_offshore.validate(src + " cf_offshore");
  return w;
}

WinterDataset load_winter(const std::filesystem::path& demand_file, const std::filesystem::path& weather_file,
                          int winter_id) {
  return assemble_dataset(winter_id, read_weather_csv(weather_file), read_demand_csv(demand_file));
}

void write_demand_csv(const std::filesystem::path& path, const HourlySeries& demand) {
  auto out = open_out(path);
  out << "timestamp,demand_mw\n";
  for (std::size_t i = 0; i < demand.size(); ++i) {
    out << format_hour(demand.time_at(i)) << ',' << format_double(demand.values[i]) << '\n';
  }
}

void write_weather_csv(const std::filesystem::path& path, const WeatherHourly& weather) {
  auto out = open_out(path);
  out << "timestamp,temp_c,wind_ms,cf_onshore,cf_offshore\n";
  for (std::size_t i = 0; i < weather.temperature.size(); ++i) {
    out << format_hour(weather.temperature.time_at(i)) << ',' << format_double(weather.temperature.values[i]) << ','
        << format_double(weather.wind_speed.values[i]) << ',' << format_double(weather.cf_onshore.values[i]) << ','
        << format_double(weather.cf_offshore.values[i]) << '\n';
  }
}

void write_winter(const WinterDataset& data, const std::filesystem::path& demand_file,
                  const std::filesystem::path& weather_file) {
  if (!data.has_hourly_demand()) {
    throw ContractError("write_winter: dataset for winter " + std::to_string(data.winter_id()) + " has no hourly demand");
  }
  write_demand_csv(demand_file, {start_of(winter_start(data.winter_id())), data.hourly_demand, SeriesUnit::megawatts});
  write_weather_csv(weather_file, data.weather);
}

}  // namespace shiftrisk
