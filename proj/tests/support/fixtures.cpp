#include "fixtures.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace shiftrisk::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = fs::temp_directory_path() /
          ("shiftrisk_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::remove_all(path_);
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

double residual_sd_for_r2(SynthSpec spec, int n_winters, double r2) {
  spec.residual_sd = 0.0;
  spec.christmas_dip.reset();
  spec.hourly_demand = false;
  const auto data = generate_synthetic(spec, n_winters);
  double sum = 0.0;
  double sq = 0.0;
  std::size_t n = 0;
  for (const auto& w : data) {
    for (double d : w.observed_peak_demand) {
      sum += d;
      sq += d * d;
      ++n;
    }
  }
  const double mean = sum / static_cast<double>(n);
  const double var = sq / static_cast<double>(n) - mean * mean;
  return std::sqrt(var * (1.0 - r2) / r2);
}

namespace {

SynthSpec standard_spec() {
  SynthSpec spec;
  spec.rng_seed = 1;
  spec.residual_sd = residual_sd_for_r2(spec, 11, 0.97);
  return spec;
}

}  // namespace

const std::vector<WinterDataset>& standard_corpus() {
  static const std::vector<WinterDataset> data = generate_synthetic(standard_spec(), 11);
  return data;
}

const RegressionFit& standard_fit() {
  static const RegressionFit fit = fit_ols(build_design_matrix(standard_corpus()));
  return fit;
}

const std::vector<GeneratingUnit>& standard_fleet() {
  static const std::vector<GeneratingUnit> fleet = synthetic_fleet(60000.0, 3);
  return fleet;
}

const CapacityDistribution& standard_distribution() {
  static const CapacityDistribution dist = convolve_fleet(standard_fleet());
  return dist;
}

RegressionFit exact_fit(const CoefficientSet& coefficients, std::span<const WinterDataset> data, double residual_sd) {
  RegressionFit fit;
  fit.coefficients = coefficients;
  fit.standard_errors = coefficients;
  fit.residual_sd = residual_sd;
  for (const auto& w : data) {
    const auto central = central_estimate(coefficients, w);
    std::vector<double> e(w.days());
    for (std::size_t t = 0; t < w.days(); ++t) e[t] = w.observed_peak_demand[t] - central[t];
    fit.residuals[w.winter_id()] = std::move(e);
    fit.n_obs += w.days();
  }
  return fit;
}

namespace {

void hold_at_peak(HourlySeries& s) {
  for (std::size_t d = 0; d + 1 <= s.size() / kHoursPerDay; ++d) {
    const double v = s.values[d * kHoursPerDay + kPeakHour];
    for (int h = 0; h < kHoursPerDay; ++h) s.values[d * kHoursPerDay + static_cast<std::size_t>(h)] = v;
  }
}

}  // namespace

WinterDataset flat_wind(const WinterDataset& data) {
  WeatherHourly weather = data.weather;
  hold_at_peak(weather.cf_onshore);
  hold_at_peak(weather.cf_offshore);
  HourlySeries demand{start_of(winter_start(data.winter_id())), data.hourly_demand, SeriesUnit::megawatts};
  return assemble_dataset(data.winter_id(), std::move(weather), std::move(demand));
}

WinterDataset flat_profile(const WinterDataset& data) {
  WinterDataset out = flat_wind(data);
  for (std::size_t t = 0; t < out.days(); ++t) {
    for (int h = 0; h < kHoursPerDay; ++h) {
      out.hourly_demand[t * kHoursPerDay + static_cast<std::size_t>(h)] = data.observed_peak_demand[t];
    }
  }
  out.observed_peak_demand = data.observed_peak_demand;
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace shiftrisk::testing
