#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "shiftrisk/capacity.hpp"
#include "shiftrisk/dataset.hpp"
#include "shiftrisk/demand_model.hpp"
#include "shiftrisk/synthetic.hpp"

namespace shiftrisk::testing {

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

/// Residual SD giving the requested R^2 against the noiseless demand of `spec`.
double residual_sd_for_r2(SynthSpec spec, int n_winters, double r2);

/// Eleven winters from 2009 generated with the reference coefficients, seed 1, R^2 near 0.97.
const std::vector<WinterDataset>& standard_corpus();
const RegressionFit& standard_fit();
/// Synthetic 60 GW fleet, seed 3, and its exact distribution.
const std::vector<GeneratingUnit>& standard_fleet();
const CapacityDistribution& standard_distribution();

/// A fit that carries the given coefficients exactly, with residuals observed - formula.
RegressionFit exact_fit(const CoefficientSet& coefficients, std::span<const WinterDataset> data,
                        double residual_sd = 0.0);

/// Copy of `data` whose hourly demand equals the daily peak at every hour and whose
/// capacity factors are held at their 18:00 value for the whole day.
WinterDataset flat_profile(const WinterDataset& data);
/// Same, but only the capacity factors are held flat; the demand profile is kept.
WinterDataset flat_wind(const WinterDataset& data);

std::string read_file(const std::filesystem::path& path);

}  // namespace shiftrisk::testing
