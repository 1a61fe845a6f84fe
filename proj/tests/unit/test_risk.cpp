#include <gtest/gtest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "shiftrisk/error.hpp"
#include "shiftrisk/risk.hpp"

using namespace shiftrisk;
using shiftrisk::testing::standard_corpus;
using shiftrisk::testing::standard_distribution;
using shiftrisk::testing::standard_fit;

namespace {

ScenarioDemand toy_demand(std::vector<double> central, double residual_sd = 0.0) {
  ScenarioDemand sd;
  sd.scenario_id = "toy";
  sd.winter_id = 2010;
  sd.residual_sd = residual_sd;
  sd.base_central = central;
  sd.central = std::move(central);
  sd.residual.assign(sd.central.size(), 0.0);
  return sd;
}

WindPowerSeries no_wind(std::size_t n) { return {"toy", {}, std::vector<double>(n, 0.0)}; }

Scenario calibrated_s1() { return reference_scenarios()[0].with_year_effect(2700.0); }

}  // namespace

TEST(Lole, SingleDayToy) {
  const CapacityDistribution d(0, 100, {0.1, 0.9});
  const auto r = lole(d, toy_demand({50.0}), no_wind(1), ResidualMode::empirical);
  EXPECT_DOUBLE_EQ(r.lole, 0.1);
  ASSERT_EQ(r.per_day_lolp.size(), 1U);
  EXPECT_FALSE(r.lolh);
}

TEST(Lole, StochasticSingleDayMatchesMixture) {
  const auto& plain = standard_distribution();
  const double sigma = 640.0;
  const auto smeared = smear_gaussian(plain, sigma);
  for (double d : {48000.0, 51234.5, 53800.0, 56000.0}) {
    auto sd = toy_demand({d}, sigma);
    const WindPowerSeries wind{"toy", {}, {1500.0}};
    const auto r = lole(smeared, sd, wind, ResidualMode::stochastic);
    EXPECT_NEAR(r.lole, oracle::gaussian_mixture_below(plain, sigma, d - 1500.0), 1e-4) << d;
  }
}

TEST(Lole, ModeMismatchIsContractError) {
  const auto& plain = standard_distribution();
  const auto smeared = smear_gaussian(plain, 640.0);
  EXPECT_THROW(lole(plain, toy_demand({50000.0}, 640.0), no_wind(1), ResidualMode::stochastic), ContractError);
  EXPECT_THROW(lole(smeared, toy_demand({50000.0}, 640.0), no_wind(1), ResidualMode::empirical), ContractError);
  EXPECT_THROW(lole(smeared, toy_demand({50000.0}, 500.0), no_wind(1), ResidualMode::stochastic), ContractError);
  EXPECT_THROW(lole(plain, toy_demand({50000.0, 1.0}), no_wind(1), ResidualMode::empirical), ContractError);
}

TEST(Lole, SumOfDailyProbabilities) {
  const auto sd = map_to_scenario(standard_fit(), standard_corpus()[1], calibrated_s1());
  const auto r = lole(standard_distribution(), sd, daily_wind(sd), ResidualMode::empirical);
  ASSERT_EQ(r.per_day_lolp.size(), sd.days());
  double sum = 0.0;
  for (double p : r.per_day_lolp) {
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
    sum += p;
  }
  EXPECT_DOUBLE_EQ(r.lole, sum);
  EXPECT_GT(r.lole, 0.0);
}

TEST(Lole, DoublingCapacityDoesNotRaiseRisk) {
  auto fleet = shiftrisk::testing::standard_fleet();
  const auto base = convolve_fleet(fleet, 10);
  for (auto& u : fleet) u.capacity_mw *= 2.0;
  const auto doubled = convolve_fleet(fleet, 10);
  for (std::size_t w = 0; w < 3; ++w) {
    const auto sd = map_to_scenario(standard_fit(), standard_corpus()[w], calibrated_s1());
    const auto a = lole(base, sd, daily_wind(sd), ResidualMode::empirical).lole;
    const auto b = lole(doubled, sd, daily_wind(sd), ResidualMode::empirical).lole;
    EXPECT_LE(b, a);
  }
}

TEST(Lole, MonotoneInDemandAndWind) {
  const auto& w = standard_corpus()[3];
  const auto& d = standard_distribution();
  double prev = -1.0;
  for (double phi = 0.0; phi <= 6000.0; phi += 500.0) {
    const auto sd = map_to_scenario(standard_fit(), w, reference_scenarios()[0].with_year_effect(phi));
    const double v = lole(d, sd, daily_wind(sd), ResidualMode::empirical).lole;
    EXPECT_GE(v, prev);
    prev = v;
  }
  const auto sd = map_to_scenario(standard_fit(), w, calibrated_s1());
  auto wind = daily_wind(sd);
  const double before = lole(d, sd, wind, ResidualMode::empirical).lole;
  for (auto& v : wind.values) v += 800.0;
  EXPECT_LE(lole(d, sd, wind, ResidualMode::empirical).lole, before);
}

TEST(Lolh, FlatProfileIsTwentyFourTimesLole) {
  const auto& d = standard_distribution();
  const auto smeared = smear_gaussian(d, standard_fit().residual_sd);
  for (std::size_t i : {0U, 5U}) {
    const auto flat = shiftrisk::testing::flat_profile(standard_corpus()[i]);
    const auto sd = map_to_scenario(standard_fit(), flat, calibrated_s1());
    for (ShiftSpec s : {ShiftSpec{}, ShiftSpec{-9, 0}, ShiftSpec{0, 2}}) {
      const auto shifted = apply_shift(sd, s);
      const auto e = lolh(d, shifted, flat, hourly_wind(shifted), ResidualMode::empirical);
      EXPECT_NEAR(*e.lolh, 24.0 * e.lole, 1e-9);
      const auto st = lolh(smeared, shifted, flat, hourly_wind(shifted), ResidualMode::stochastic);
      EXPECT_NEAR(*st.lolh, 24.0 * st.lole, 1e-9);
      EXPECT_GT(st.lole, 0.0);
    }
  }
}

TEST(Lolh, NonPositiveOffsetsBoundedByFlat) {
  const auto& d = standard_distribution();
  const auto data = shiftrisk::testing::flat_wind(standard_corpus()[1]);
  const auto sd = map_to_scenario(standard_fit(), data, calibrated_s1());
  for (int tau : {0, -4, 11}) {
    const auto shifted = apply_shift(sd, {tau, 0});
    const auto r = lolh(d, shifted, data, hourly_wind(shifted), ResidualMode::empirical);
    EXPECT_LE(*r.lolh, 24.0 * r.lole + 1e-12);
    EXPECT_GE(*r.lolh, r.lole - 1e-12);  // the peak hour has a zero offset
  }
}

TEST(Lolh, TwoDayToyMatchesHourByHour) {
  const CapacityDistribution d(0, 100, {0.05, 0.15, 0.8});  // 0, 100, 200 MW
  const auto& w = standard_corpus()[0];
  WinterDataset toy = w;
  const std::size_t n = w.days();
  std::vector<double> peaks(n, 1.0);
  peaks[0] = 180.0;
  peaks[1] = 120.0;
  toy.observed_peak_demand = peaks;
  toy.hourly_demand.assign(n * 24, 1.0);
  for (int h = 0; h < 24; ++h) {
    toy.hourly_demand[static_cast<std::size_t>(h)] = 180.0 - 4.0 * std::abs(h - kPeakHour);
    toy.hourly_demand[24 + static_cast<std::size_t>(h)] = 120.0 - 3.0 * std::abs(h - kPeakHour);
  }
  auto sd = toy_demand(peaks);
  sd.residual.assign(n, 0.0);
  WindPowerSeries wind{"toy", {}, std::vector<double>(n * 24, 0.0)};
  for (std::size_t i = 0; i < 48; ++i) wind.values[i] = static_cast<double>(i % 7) * 9.0;
  // daily_wind reads the padded hourly wind at 18:00.
  sd.wind_hourly_padded = {"toy", {}, std::vector<double>(n * 24, 0.0)};
  sd.wind_hourly_padded.values[kPeakHour] = wind.values[kPeakHour];
  sd.wind_hourly_padded.values[24 + kPeakHour] = wind.values[24 + kPeakHour];
  const auto r = lolh(d, sd, toy, wind, ResidualMode::empirical);
  double want = 0.0;
  for (std::size_t i = 0; i < 48; ++i) {
    const double net = toy.hourly_demand[i] - wind.values[i];
    want += net > 200.0 ? 1.0 : net > 100.0 ? 0.2 : net > 0.0 ? 0.05 : 0.0;
  }
  want += 0.05 * static_cast<double>((n - 2) * 24);  // net demand 1 MW on the other days
  EXPECT_NEAR(*r.lolh, want, 1e-9);
  EXPECT_EQ(r.per_hour_lolp.size(), n * 24);
}

TEST(Lolh, NeedsHourlyDemand) {
  WinterDataset w = standard_corpus()[0];
  const auto sd = map_to_scenario(standard_fit(), w, calibrated_s1());
  w.hourly_demand.clear();
  EXPECT_THROW(lolh(standard_distribution(), sd, w, hourly_wind(sd), ResidualMode::empirical), ContractError);
}

TEST(ResidualMode, Names) {
  EXPECT_EQ(to_string(ResidualMode::empirical), "empirical");
  EXPECT_EQ(parse_residual_mode("stochastic"), ResidualMode::stochastic);
  EXPECT_THROW(parse_residual_mode("gaussian"), InputError);
}
