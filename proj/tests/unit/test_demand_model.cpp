#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "fixtures.hpp"
#include "shiftrisk/demand_model.hpp"
#include "shiftrisk/error.hpp"
#include "shiftrisk/synthetic.hpp"

using namespace shiftrisk;
using shiftrisk::testing::standard_corpus;
using shiftrisk::testing::standard_fit;

namespace {

std::vector<WinterDataset> noiseless(int n, std::uint64_t seed = 3) {
  SynthSpec spec;
  spec.rng_seed = seed;
  spec.hourly_demand = false;
  return generate_synthetic(spec, n);
}

}  // namespace

TEST(DesignMatrix, TwoWintersShape) {
  const auto data = noiseless(2);
  const auto dm = build_design_matrix(data);
  EXPECT_EQ(dm.x.rows(), 302);
  EXPECT_EQ(dm.x.cols(), 12);
  EXPECT_EQ(dm.y.size(), 302);
  ASSERT_EQ(dm.column_names.size(), 12U);
  EXPECT_EQ(dm.column_names[0], "intercept");
  EXPECT_EQ(dm.column_names[1], "te");
  EXPECT_EQ(dm.column_names[4], "ws");
  EXPECT_EQ(dm.column_names[11], "year_2009");
  EXPECT_EQ(dm.reference_winter, 2010);
  EXPECT_EQ(dm.rows[151].winter_id, 2010);
  EXPECT_EQ(dm.rows[151].day, 0U);
}

TEST(DesignMatrix, ReferenceDayAndDsnOrigin) {
  const auto data = noiseless(2);
  const auto dm = build_design_matrix(data);
  for (Eigen::Index r = 0; r < dm.x.rows(); ++r) {
    const auto& key = dm.rows[static_cast<std::size_t>(r)];
    const auto& w = key.winter_id == 2009 ? data[0] : data[1];
    const int dow = w.calendar.dow[key.day];
    for (int k = 0; k < 6; ++k) {
      EXPECT_EQ(dm.x(r, 5 + k), dow == k + 1 ? 1.0 : 0.0);
    }
    EXPECT_EQ(dm.x(r, 0), 1.0);
    EXPECT_EQ(dm.x(r, 2), static_cast<double>(key.day));
    EXPECT_EQ(dm.x(r, 3), static_cast<double>(key.day * key.day));
    EXPECT_EQ(dm.x(r, 1), w.te_at_peak(static_cast<long>(key.day)));
    EXPECT_EQ(dm.y(r), w.observed_peak_demand[key.day]);
  }
  // 1 Nov 2009 was a Sunday.
  EXPECT_EQ(dm.x.row(0).segment(5, 6).sum(), 0.0);
  EXPECT_EQ(dm.x(0, 2), 0.0);
  EXPECT_EQ(dm.x(0, 3), 0.0);
}

TEST(DesignMatrix, Preconditions) {
  const auto data = noiseless(2);
  EXPECT_THROW(build_design_matrix(std::span(data).first(1)), ContractError);
  DesignOptions no_years;
  no_years.year_effects = false;
  EXPECT_EQ(build_design_matrix(std::span(data).first(1), no_years).x.cols(), 11);
  std::vector<WinterDataset> twice{data[0], data[0]};
  EXPECT_THROW(build_design_matrix(twice), ContractError);
  DesignOptions bad_ref;
  bad_ref.reference_winter = 1999;
  EXPECT_THROW(build_design_matrix(data, bad_ref), ContractError);
}

TEST(Fit, NoiselessRecoveryIsExact) {
  const auto data = noiseless(11);
  const auto fit = fit_ols(build_design_matrix(data));
  const auto truth = reference_coefficients();
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  EXPECT_LT(rel(fit.coefficients.alpha, truth.alpha), 1e-6);
  EXPECT_LT(rel(fit.coefficients.lambda1, truth.lambda1), 1e-6);
  EXPECT_LT(rel(fit.coefficients.beta1, truth.beta1), 1e-6);
  EXPECT_LT(std::abs(fit.coefficients.beta2 - truth.beta2) / std::abs(truth.beta2), 1e-6);
  EXPECT_LT(rel(fit.coefficients.gamma1, truth.gamma1), 1e-6);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_LT(rel(fit.coefficients.omega[k], truth.omega[k]), 1e-6);
  ASSERT_EQ(fit.coefficients.phi.size(), 10U);
  for (const auto& [w, v] : truth.phi) EXPECT_LT(rel(fit.coefficients.phi.at(w), v), 1e-6) << w;
  EXPECT_EQ(fit.coefficients.reference_winter, 2019);
  EXPECT_EQ(fit.n_coefficients(), 21U);
}

TEST(Fit, DuplicateColumnIsSingular) {
  const auto dm = build_design_matrix(noiseless(2));
  Eigen::MatrixXd x(dm.x.rows(), dm.x.cols() + 1);
  x << dm.x, dm.x.col(1);
  auto names = dm.column_names;
  names.push_back("te_copy");
  try {
    solve_least_squares(x, dm.y, names);
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("te"), std::string::npos);
    EXPECT_NE(what.find("te_copy"), std::string::npos);
  }
  EXPECT_THROW(solve_least_squares(dm.x.topRows(5), dm.y.head(5), dm.column_names), ContractError);
}

TEST(Fit, NormalEquationsAndResidualSum) {
  const auto dm = build_design_matrix(standard_corpus());
  const auto fit = fit_ols(dm);
  const Eigen::VectorXd beta = coefficient_vector(fit.coefficients, dm);
  const Eigen::VectorXd e = dm.y - dm.x * beta;
  const Eigen::VectorXd xte = dm.x.transpose() * e;
  for (Eigen::Index j = 0; j < xte.size(); ++j) {
    EXPECT_LT(std::abs(xte(j)), 1e-9 * dm.x.col(j).norm() * dm.y.norm()) << dm.column_names[static_cast<std::size_t>(j)];
  }
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& [w, r] : fit.residuals) {
    for (double v : r) sum += v;
    n += r.size();
  }
  EXPECT_EQ(n, dm.rows.size());
  EXPECT_LT(std::abs(sum), 1e-6 * dm.y.mean());
  EXPECT_GE(fit.residual_sd, 0.0);
  EXPECT_LE(fit.adjusted_r2, 1.0);
  EXPECT_LT(std::abs(fit.lag1_autocorr), 0.1);
}

TEST(Fit, FittedValuesDoNotDependOnReferenceCategories) {
  const auto& data = standard_corpus();
  const auto a = fit_ols(build_design_matrix(data));
  DesignOptions other;
  other.reference_dow = kMonday;
  other.reference_winter = 2012;
  const auto b = fit_ols(build_design_matrix(data, other));
  EXPECT_EQ(b.coefficients.reference_dow, kMonday);
  EXPECT_EQ(b.coefficients.dow_effect(kMonday), 0.0);
  EXPECT_EQ(b.coefficients.year_effect(2012), 0.0);
  for (const auto& w : data) {
    const auto ca = central_estimate(a, w);
    const auto cb = central_estimate(b, w);
    for (std::size_t t = 0; t < w.days(); ++t) EXPECT_NEAR(ca[t], cb[t], 1e-8 * std::abs(ca[t]));
  }
  EXPECT_NEAR(a.residual_sd, b.residual_sd, 1e-8 * a.residual_sd);
}

TEST(Fit, AdjustedR2TracksConfiguredValue) {
  SynthSpec spec;
  spec.hourly_demand = false;
  spec.residual_sd = shiftrisk::testing::residual_sd_for_r2(spec, 11, 0.97);
  for (std::uint64_t seed : {11U, 12U, 13U, 14U}) {
    spec.rng_seed = seed;
    const auto fit = fit_ols(build_design_matrix(generate_synthetic(spec, 11)));
    EXPECT_NEAR(fit.adjusted_r2, 0.97, 0.01) << seed;
  }
}

TEST(Fit, CoefficientsWithinThreeStandardErrors) {
  SynthSpec spec;
  spec.first_winter = 2010;  // winters 2010..2019, so the latest is the reference as in the true set
  spec.hourly_demand = false;
  spec.residual_sd = 800.0;
  const CoefficientSet& truth = spec.true_coefficients;
  std::map<std::string, int> inside;
  const int reps = 200;
  for (int r = 0; r < reps; ++r) {
    spec.rng_seed = 9000 + static_cast<std::uint64_t>(r);
    const auto fit = fit_ols(build_design_matrix(generate_synthetic(spec, 10)));
    const auto& est = fit.coefficients;
    const auto& se = fit.standard_errors;
    const auto check = [&](const std::string& name, double e, double s, double t) {
      inside[name] += std::abs(e - t) <= 3.0 * s;
    };
    check("alpha", est.alpha, se.alpha, truth.alpha);
    check("lambda1", est.lambda1, se.lambda1, truth.lambda1);
    check("beta1", est.beta1, se.beta1, truth.beta1);
    check("beta2", est.beta2, se.beta2, truth.beta2);
    check("gamma1", est.gamma1, se.gamma1, truth.gamma1);
    for (std::size_t i = 0; i < 6; ++i) check("omega" + std::to_string(i), est.omega[i], se.omega[i], truth.omega[i]);
    ASSERT_EQ(est.phi.size(), 9U);
    for (const auto& [w, p] : est.phi) check("phi" + std::to_string(w), p, se.phi.at(w), truth.phi.at(w));
  }
  ASSERT_EQ(inside.size(), 20U);
  for (const auto& [name, n] : inside) EXPECT_GE(n, 198) << name;
}

TEST(CentralEstimate, ObservedIsCentralPlusResidual) {
  const auto& fit = standard_fit();
  for (const auto& w : standard_corpus()) {
    const auto c = central_estimate(fit, w);
    for (std::size_t t = 0; t < w.days(); ++t) {
      EXPECT_NEAR(w.observed_peak_demand[t] - c[t] - fit.residual(w.winter_id(), t), 0.0, 1e-8);
    }
  }
}

TEST(CentralEstimate, FormulaDifferencesAndReferenceValues) {
  const auto c = reference_coefficients();
  EXPECT_DOUBLE_EQ(regression_formula(c, 0.0, 0, kSunday, 0.0, 2019), 46415.16);
  const double sat = regression_formula(c, 3.0, 40, kSaturday, 5.0, 2012);
  const double fri = regression_formula(c, 3.0, 40, 5, 5.0, 2012);
  EXPECT_NEAR(sat - fri, c.omega[5] - c.omega[4], 1e-9);
  EXPECT_DOUBLE_EQ(c.lambda1, -562.47);
  EXPECT_DOUBLE_EQ(c.year_effect(2009), 6712.74);
  EXPECT_THROW(c.year_effect(2030), ContractError);
  auto data = noiseless(1);
  data[0].calendar.winter_id = 2030;
  EXPECT_THROW(central_estimate(c, data[0]), ContractError);
}

TEST(Fit, JsonRoundTrip) {
  const auto& fit = standard_fit();
  const std::string text = fit_to_json(fit);
  const auto back = fit_from_json(text);
  EXPECT_EQ(fit_to_json(back), text);
  EXPECT_EQ(back.coefficients.lambda1, fit.coefficients.lambda1);
  EXPECT_EQ(back.coefficients.phi, fit.coefficients.phi);
  EXPECT_EQ(back.standard_errors.omega, fit.standard_errors.omega);
  EXPECT_EQ(back.residuals, fit.residuals);
  EXPECT_EQ(back.residual_sd, fit.residual_sd);
  EXPECT_EQ(back.n_coefficients(), 21U);
  EXPECT_THROW(fit_from_json("{}"), InputError);
  const auto coeffs = coefficients_from_json(coefficients_to_json(reference_coefficients()));
  EXPECT_EQ(coeffs.omega, reference_coefficients().omega);
  EXPECT_EQ(coeffs.phi, reference_coefficients().phi);
}
