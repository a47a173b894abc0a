#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "figgie/chartist.hpp"

namespace figgie {
namespace {

ChartistParams params(ChartistVariant v, int horizon = 4) {
  ChartistParams p;
  p.variant = v;
  p.horizon = horizon;
  return p;
}

TEST(Chartist, ConstantSeriesProjectsCurrentPrice) {
  const std::vector<double> prices(10, 7.0);
  for (auto v : {ChartistVariant::kTelescoped, ChartistVariant::kRegression}) {
    const auto e = chartist_expectation(prices, params(v));
    ASSERT_EQ(e.status, ChartistEstimate::Status::kOk);
    EXPECT_NEAR(e.value, 7.0, 1e-12);
    EXPECT_FALSE(e.clamped);
  }
  EXPECT_EQ(mean_log_return(prices, 4), 0.0);
}

TEST(Chartist, TelescopedDoublingOverHorizon) {
  // Window start 1, latest 2, tau = 4: mean return ln2/4, projection 2 * 2.
  const std::vector<double> prices = {1.0, 1.3, 0.7, 1.9, 2.0};
  EXPECT_NEAR(mean_log_return(prices, 4), std::log(2.0) / 4, 1e-15);
  const auto e = chartist_expectation(prices, params(ChartistVariant::kTelescoped));
  EXPECT_NEAR(e.value, 4.0, 1e-12);
}

TEST(Chartist, TelescopingIdentity) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> prices(12);
    for (double& p : prices) p = 0.01 + 50.0 * uniform01(rng);
    for (int tau = 2; tau <= 11; ++tau) {
      double naive = 0.0;
      const std::size_t n = prices.size();
      for (int j = 0; j < tau; ++j) naive += std::log(prices[n - 1 - j] / prices[n - 2 - j]);
      ASSERT_NEAR(mean_log_return(prices, tau), naive / tau, 1e-12);
    }
  }
}

TEST(Chartist, RegressionRecoversExactLogLinearSeries) {
  std::vector<double> t;
  std::vector<double> p;
  for (int i = 0; i < 8; ++i) {
    t.push_back(i);
    p.push_back(std::exp(1.0 + 0.1 * i));
  }
  const LogLinearFit fit = fit_log_linear(t, p);
  EXPECT_NEAR(fit.intercept, 1.0, 1e-9);
  EXPECT_NEAR(fit.slope, 0.1, 1e-9);
  const auto e = chartist_expectation(p, params(ChartistVariant::kRegression, 4));
  EXPECT_NEAR(e.value, std::exp(1.0 + 0.1 * 8), 1e-9);
}

TEST(Chartist, FitRejectsDegenerateInput) {
  const std::vector<double> t1 = {1.0};
  const std::vector<double> p1 = {1.0};
  EXPECT_THROW((void)fit_log_linear(t1, p1), std::invalid_argument);
  const std::vector<double> t2 = {1.0, 1.0};
  const std::vector<double> p2 = {1.0, 2.0};
  EXPECT_THROW((void)fit_log_linear(t2, p2), std::invalid_argument);
  const std::vector<double> t3 = {1.0, 2.0};
  const std::vector<double> p3 = {1.0, 0.0};
  EXPECT_THROW((void)fit_log_linear(t3, p3), std::invalid_argument);
}

TEST(Chartist, InsufficientHistoryAbstains) {
  const std::vector<double> four = {1, 2, 3, 4};
  EXPECT_EQ(chartist_expectation(four, params(ChartistVariant::kTelescoped)).status,
            ChartistEstimate::Status::kInsufficientHistory);
  const std::vector<double> one = {1};
  EXPECT_EQ(chartist_expectation(one, params(ChartistVariant::kRegression)).status,
            ChartistEstimate::Status::kInsufficientHistory);
  const std::vector<double> two = {1, 2};
  EXPECT_EQ(chartist_expectation(two, params(ChartistVariant::kRegression)).status, ChartistEstimate::Status::kOk);
}

TEST(Chartist, NonpositivePriceInWindowIsFlagged) {
  const std::vector<double> prices = {1, 2, 0, 4, 5};
  for (auto v : {ChartistVariant::kTelescoped, ChartistVariant::kRegression}) {
    EXPECT_EQ(chartist_expectation(prices, params(v)).status, ChartistEstimate::Status::kNonpositivePrice);
  }
  // Outside the window it does not matter.
  const std::vector<double> old_zero = {0, 1, 2, 3, 4, 5};
  EXPECT_EQ(chartist_expectation(old_zero, params(ChartistVariant::kTelescoped)).status,
            ChartistEstimate::Status::kOk);
}

TEST(Chartist, ExplosiveSeriesIsClampedAndFlagged) {
  const std::vector<double> prices = {1.0, 1e30, 1e60, 1e90, 1e120};
  for (auto v : {ChartistVariant::kTelescoped, ChartistVariant::kRegression}) {
    const auto e = chartist_expectation(prices, params(v));
    EXPECT_TRUE(e.clamped);
    EXPECT_EQ(e.value, 1e100);
  }
  const std::vector<double> huge = {1e-300, 1.0, 1e300, 1e300, 1e300};
  const auto e = chartist_expectation(huge, params(ChartistVariant::kTelescoped));
  EXPECT_TRUE(e.clamped);
  EXPECT_TRUE(std::isfinite(e.value));
}

TEST(Chartist, FeedingEstimatesBackDivergesToTheCap) {
  // A market where each new trade prints at the chartist's own estimate.
  for (auto v : {ChartistVariant::kTelescoped, ChartistVariant::kRegression}) {
    std::vector<double> prices = {10.0, 10.0, 10.0, 10.0, 10.5};
    double previous = prices.back();
    bool clamped = false;
    int steps = 0;
    for (; steps < 100000 && !clamped; ++steps) {
      const auto e = chartist_expectation(prices, params(v));
      ASSERT_EQ(e.status, ChartistEstimate::Status::kOk);
      ASSERT_TRUE(std::isfinite(e.value));
      ASSERT_GE(e.value, previous);
      previous = e.value;
      clamped = e.clamped;
      prices.push_back(e.value);
    }
    EXPECT_TRUE(clamped) << steps;
  }
}

}  // namespace
}  // namespace figgie
