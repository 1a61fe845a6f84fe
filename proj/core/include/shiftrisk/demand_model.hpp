#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "shiftrisk/calendar.hpp"
#include "shiftrisk/dataset.hpp"

namespace shiftrisk {

/// Coefficients of the daily-peak regression
///
///   D = alpha + lambda1*TE + beta1*DSN + beta2*DSN^2 + sum_m omega_m*[DOW=m] + gamma1*WS + phi_i*[Y=i] + eps
///
/// One day of week and one winter are reference categories with no coefficient.
struct CoefficientSet {
  double alpha = 0.0;    // MW
  double lambda1 = 0.0;  // MW/degC
  double beta1 = 0.0;    // MW/day
  double beta2 = 0.0;    // MW/day^2
  double gamma1 = 0.0;   // MW/(m/s)
  std::array<double, 6> omega{};  // non-reference days in ascending m
  std::map<int, double> phi;      // non-reference winters
  int reference_dow = kSunday;
  int reference_winter = 0;
  bool year_effects = true;

  /// Effect of day m relative to the reference day (0 for the reference itself).
  double dow_effect(int m) const;
  /// All seven day effects, index m-1.
  std::array<double, 7> dow_effects() const;
  bool knows_winter(int winter_id) const noexcept;
  /// Throws ContractError for a winter that is neither fitted nor the reference.
  double year_effect(int winter_id) const;
  /// Day of week that omega[slot] belongs to.
  int omega_day(std::size_t slot) const;
};

/// Reference GB coefficients: winters 2009-2018 carry year effects, 2019 is the reference.
CoefficientSet reference_coefficients();
CoefficientSet reference_standard_errors();

/// Regression formula without the residual, evaluated for one day.
double regression_formula(const CoefficientSet& c, double te, int dsn, int dow, double ws, int winter_id);

struct DesignOptions {
  int reference_dow = kSunday;
  std::optional<int> reference_winter;  // default: the latest winter
  bool year_effects = true;
};

struct RowKey {
  int winter_id = 0;
  std::size_t day = 0;
};

/// Columns: intercept, TE, DSN, DSN^2, WS, six DoW indicators, then one indicator per
/// non-reference winter (ascending). One row per winter day.
struct DesignMatrix {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  std::vector<RowKey> rows;
  std::vector<std::string> column_names;
  std::vector<int> winters;
  int reference_dow = kSunday;
  int reference_winter = 0;
  bool year_effects = true;
};

DesignMatrix build_design_matrix(std::span<const WinterDataset> data, const DesignOptions& options = {});

struct LeastSquaresSolution {
  Eigen::VectorXd beta;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd residuals;
  double rss = 0.0;
  double tss = 0.0;
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
};

/// Column-pivoted Householder QR least squares with classical (homoskedastic) standard errors.
/// Throws SingularityError naming a collinear column pair when the matrix is rank deficient.
LeastSquaresSolution solve_least_squares(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                         std::span<const std::string> column_names);

struct RegressionFit {
  CoefficientSet coefficients;
  CoefficientSet standard_errors;  // same shape; the classical SEs understate under autocorrelation
  std::map<int, std::vector<double>> residuals;  // per winter, per day
  double residual_sd = 0.0;  // sample SD of the residuals
  double r2 = 0.0;
  double adjusted_r2 = 0.0;
  double lag1_autocorr = 0.0;  // pooled within winters
  std::size_t n_obs = 0;

  double residual(int winter_id, std::size_t day) const;
  std::size_t n_coefficients() const noexcept;
};

RegressionFit fit_ols(const DesignMatrix& design);

/// Raw coefficient vector in design-matrix column order.
Eigen::VectorXd coefficient_vector(const CoefficientSet& c, const DesignMatrix& design);

/// D-hat per date: the regression formula without the residual.
std::vector<double> central_estimate(const RegressionFit& fit, const WinterDataset& data);
std::vector<double> central_estimate(const CoefficientSet& coefficients, const WinterDataset& data);

std::string coefficients_to_json(const CoefficientSet& c);
CoefficientSet coefficients_from_json(std::string_view text);
std::string fit_to_json(const RegressionFit& fit);
RegressionFit fit_from_json(std::string_view text, std::string_view source = "fit");

}  // namespace shiftrisk
