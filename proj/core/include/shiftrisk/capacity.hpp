#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace shiftrisk {

/// Two-state conventional unit: fully available with probability `availability`, else out.
struct GeneratingUnit {
  std::string id;
  double capacity_mw = 0.0;
  double availability = 1.0;
};

/// Distribution of available conventional capacity on a lattice origin + j*step (MW).
///
/// With sigma() == 0 entry j is a point mass at its lattice level. After Gaussian smearing
/// (sigma() > 0) entry j is the mass of the cell [level_j, level_j + step), spread uniformly,
/// which keeps P(X < x) continuous in x.
class CapacityDistribution {
 public:
  CapacityDistribution(long origin_mw, int step_mw, std::vector<double> pmf, double sigma = 0.0);

  long origin() const noexcept { return origin_; }
  int step() const noexcept { return step_; }
  double sigma() const noexcept { return sigma_; }
  bool is_smeared() const noexcept { return sigma_ > 0.0; }
  std::size_t size() const noexcept { return pmf_.size(); }
  const std::vector<double>& pmf() const noexcept { return pmf_; }
  double level(std::size_t j) const noexcept { return static_cast<double>(origin_ + static_cast<long>(j) * step_); }
  double max_level() const noexcept { return level(pmf_.size() - 1); }

  /// P(X < x), strict.
  double probability_below(double x) const;
  double mean() const;
  double variance() const;
  double total_mass() const;

 private:
  long origin_;
  int step_;
  double sigma_;
  std::vector<double> pmf_;
  std::vector<double> cdf_;  // cdf_[j] = sum of pmf_[0..j)
};

/// Exact distribution of the total available capacity of independent two-state units.
/// Capacities are rounded to the nearest multiple of `grid_step` (at least one step).
CapacityDistribution convolve_fleet(std::span<const GeneratingUnit> units, int grid_step = 1);

/// Distribution of X + mu with mu ~ N(0, sigma^2), discretised into cells of the grid and
/// truncated at +/- 6 sigma with renormalisation. sigma == 0 returns the input unchanged.
CapacityDistribution smear_gaussian(const CapacityDistribution& dist, double sigma);

/// Loss-of-load probability for one period: P(X < net_demand).
double lolp_day(const CapacityDistribution& dist, double net_demand);

double standard_normal_cdf(double z);

/// Fleet CSV: `unit_id,capacity_mw,availability_prob`.
std::vector<GeneratingUnit> load_fleet_csv(const std::filesystem::path& path);
void write_fleet_csv(const std::filesystem::path& path, std::span<const GeneratingUnit> units);

/// Representative thermal fleet of roughly `total_mw` installed capacity.
std::vector<GeneratingUnit> synthetic_fleet(double total_mw, std::uint64_t seed);

}  // namespace shiftrisk
