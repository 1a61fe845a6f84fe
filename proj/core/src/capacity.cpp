#include "shiftrisk/capacity.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "shiftrisk/csv_io.hpp"
#include "shiftrisk/error.hpp"
#include "shiftrisk/number_format.hpp"

namespace shiftrisk {

CapacityDistribution::CapacityDistribution(long origin_mw, int step_mw, std::vector<double> pmf, double sigma)
    : origin_(origin_mw), step_(step_mw), sigma_(sigma), pmf_(std::move(pmf)) {
  if (step_ <= 0) throw ContractError("CapacityDistribution: grid step must be positive");
  if (pmf_.empty()) throw ContractError("CapacityDistribution: empty pmf");
  if (sigma_ < 0.0) throw ContractError("CapacityDistribution: negative sigma");
  cdf_.resize(pmf_.size() + 1);
  long double acc = 0.0L;
  cdf_[0] = 0.0;
  for (std::size_t j = 0; j < pmf_.size(); ++j) {
    if (!(pmf_[j] >= 0.0)) throw ContractError("CapacityDistribution: negative or NaN probability");
    acc += pmf_[j];
    cdf_[j + 1] = static_cast<double>(acc);
  }
}

double CapacityDistribution::probability_below(double x) const {
  const double u = (x - static_cast<double>(origin_)) / step_;
  const double n = static_cast<double>(pmf_.size());
  if (!is_smeared()) {
    // Point masses at origin + j*step; count those strictly below x.
    if (u <= 0.0) return 0.0;
    const double count = std::ceil(u);
    return count >= n ? cdf_.back() : cdf_[static_cast<std::size_t>(count)];
  }
  if (u <= 0.0) return 0.0;
  if (u >= n) return cdf_.back();
  const double cell = std::floor(u);
  const auto j = static_cast<std::size_t>(cell);
  return cdf_[j] + pmf_[j] * (u - cell);
}

double CapacityDistribution::mean() const {
  long double m = 0.0L;
  for (std::size_t j = 0; j < pmf_.size(); ++j) m += static_cast<long double>(pmf_[j]) * level(j);
  const double cell_mid = is_smeared() ? 0.5 * step_ : 0.0;
  return static_cast<double>(m / cdf_.back()) + cell_mid;
}

double CapacityDistribution::variance() const {
  const double mu = mean() - (is_smeared() ? 0.5 * step_ : 0.0);
  long double v = 0.0L;
  for (std::size_t j = 0; j < pmf_.size(); ++j) {
    const double d = level(j) - mu;
    v += static_cast<long double>(pmf_[j]) * d * d;
  }
  const double within_cell = is_smeared() ? static_cast<double>(step_) * step_ / 12.0 : 0.0;
  return static_cast<double>(v / cdf_.back()) + within_cell;
}

double CapacityDistribution::total_mass() const { return cdf_.back(); }

CapacityDistribution convolve_fleet(std::span<const GeneratingUnit> units, int grid_step) {
  if (units.empty()) throw ContractError("convolve_fleet: empty fleet");
  if (grid_step <= 0) throw ContractError("convolve_fleet: grid step must be positive");
  std::vector<long> steps;
  steps.reserve(units.size());
  long total = 0;
  for (const auto& u : units) {
    if (!(u.capacity_mw > 0.0)) throw ValidationError("unit " + u.id + ": capacity must be positive");
    if (!(u.availability >= 0.0 && u.availability <= 1.0)) {
      throw ValidationError("unit " + u.id + ": availability must be in [0,1]");
    }
    const long s = std::max(1L, std::lround(u.capacity_mw / grid_step));
    steps.push_back(s);
    total += s;
  }
  std::vector<double> pmf(static_cast<std::size_t>(total) + 1, 0.0);
  pmf[0] = 1.0;
  long reach = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const double a = units[i].availability;
    const long c = steps[i];
    reach += c;
    for (long j = reach; j >= 0; --j) {
      const double out = pmf[static_cast<std::size_t>(j)] * (1.0 - a);
      const double in = j >= c ? pmf[static_cast<std::size_t>(j - c)] * a : 0.0;
      pmf[static_cast<std::size_t>(j)] = out + in;
    }
  }
  return CapacityDistribution(0, grid_step, std::move(pmf));
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

namespace {

// Phi(b) - Phi(a) for a < b without cancellation in the upper tail.
double normal_interval(double a, double b) {
  if (a >= 0.0) return 0.5 * (std::erfc(a / std::numbers::sqrt2) - std::erfc(b / std::numbers::sqrt2));
  return standard_normal_cdf(b) - standard_normal_cdf(a);
}

}  // namespace

CapacityDistribution smear_gaussian(const CapacityDistribution& dist, double sigma) {
  if (sigma < 0.0 || !std::isfinite(sigma)) throw ContractError("smear_gaussian: sigma must be >= 0");
  if (sigma == 0.0) return dist;
  if (dist.is_smeared()) throw ContractError("smear_gaussian: distribution is already smeared");
  const int step = dist.step();
  const long half = static_cast<long>(std::ceil(6.0 * sigma / step));
  // kernel[m + half] = P(m*step <= mu < (m+1)*step), m in [-half, half)
  std::vector<double> kernel(static_cast<std::size_t>(2 * half));
  for (long m = -half; m < half; ++m) {
    kernel[static_cast<std::size_t>(m + half)] = normal_interval(m * step / sigma, (m + 1) * step / sigma);
  }
  const auto& in = dist.pmf();
  std::vector<double> out(in.size() + kernel.size() - 1, 0.0);
  for (std::size_t j = 0; j < in.size(); ++j) {
    const double p = in[j];
    if (p == 0.0) continue;
    double* dst = out.data() + j;
    for (std::size_t m = 0; m < kernel.size(); ++m) dst[m] += p * kernel[m];
  }
  long double total = 0.0L;
  for (double v : out) total += v;
  const double scale = static_cast<double>(1.0L / total);
  for (double& v : out) v *= scale;
  return CapacityDistribution(dist.origin() - half * step, step, std::move(out), sigma);
}

double lolp_day(const CapacityDistribution& dist, double net_demand) { return dist.probability_below(net_demand); }

std::vector<GeneratingUnit> load_fleet_csv(const std::filesystem::path& path) {
  const CsvDocument doc = read_csv(path, {"unit_id", "capacity_mw", "availability_prob"});
  std::vector<GeneratingUnit> units;
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    GeneratingUnit u;
    u.id = doc.rows[r][0];
    for (std::size_t c : {1U, 2U}) {
      try {
        (c == 1 ? u.capacity_mw : u.availability) = parse_double(doc.rows[r][c]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(doc.source, doc.lines[r], c + 1, e.what());
      }
    }
    if (!(u.capacity_mw > 0.0)) throw ValidationError(doc.source + ": unit " + u.id + " capacity must be positive");
    if (!(u.availability >= 0.0 && u.availability <= 1.0)) {
      throw ValidationError(doc.source + ": unit " + u.id + " availability must be in [0,1]");
    }
    units.push_back(std::move(u));
  }
  if (units.empty()) throw InputError(doc.source + ": empty fleet");
  return units;
}

void write_fleet_csv(const std::filesystem::path& path, std::span<const GeneratingUnit> units) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << "unit_id,capacity_mw,availability_prob\n";
  for (const auto& u : units) out << u.id << ',' << format_double(u.capacity_mw) << ',' << format_double(u.availability) << '\n';
}

std::vector<GeneratingUnit> synthetic_fleet(double total_mw, std::uint64_t seed) {
  struct Class {
    double size_mw;
    double availability;
  };
  // Nuclear, large CCGT, CCGT, OCGT/biomass, small peakers.
  constexpr std::array<Class, 5> classes{{{1200.0, 0.80}, {850.0, 0.90}, {450.0, 0.92}, {250.0, 0.94}, {100.0, 0.95}}};
  constexpr std::array<double, 5> share{0.20, 0.35, 0.25, 0.12, 0.08};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.03, 0.03);
  std::vector<GeneratingUnit> units;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const int count = std::max(1, static_cast<int>(std::lround(total_mw * share[c] / classes[c].size_mw)));
    for (int i = 0; i < count; ++i) {
      const double size = std::round(classes[c].size_mw * (1.0 + jitter(rng)));
      const double avail = std::round((classes[c].availability + jitter(rng)) * 1000.0) / 1000.0;
      units.push_back({"U" + std::to_string(units.size() + 1), size, std::clamp(avail, 0.0, 1.0)});
    }
  }
  return units;
}

}  // namespace shiftrisk
