#include <gtest/gtest.h>

#include "ustep/eval/robustness.hpp"

namespace ustep::eval {
namespace {

TEST(Robustness, Singleton) {
  std::vector<double> v{1.0};
  auto r = robustness_stats(v);
  EXPECT_EQ(r.min, 1.0);
  EXPECT_EQ(r.q1, 1.0);
  EXPECT_EQ(r.median, 1.0);
  EXPECT_EQ(r.q3, 1.0);
  EXPECT_EQ(r.max, 1.0);
  EXPECT_EQ(r.iqr, 0.0);
}

TEST(Robustness, TwoValues) {
  std::vector<double> v{0.0, 1.0};
  auto r = robustness_stats(v);
  EXPECT_DOUBLE_EQ(r.median, 0.5);
  EXPECT_DOUBLE_EQ(r.q1, 0.25);
  EXPECT_DOUBLE_EQ(r.q3, 0.75);
}

TEST(Robustness, InclusiveLinearInterpolation) {
  // Expected values from numpy.quantile (default "linear" method).
  std::vector<double> v{0.3, 0.1, 0.9, 0.5};
  auto r = robustness_stats(v);
  EXPECT_DOUBLE_EQ(r.q1, 0.25);
  EXPECT_DOUBLE_EQ(r.median, 0.4);
  EXPECT_DOUBLE_EQ(r.q3, 0.6);
  EXPECT_EQ(r.values, v);  // input order kept
}

TEST(Robustness, PublishedAccuracies) {
  // Published per-dataset accuracies of the method on the ten labeled sets.
  std::vector<double> v{1.0, 0.964, 0.951, 0.998, 0.906, 0.848, 0.996, 0.764, 0.954, 0.988};
  auto r = robustness_stats(v);
  EXPECT_NEAR(r.mean, 0.937, 0.0005);
  EXPECT_NEAR(r.median, 0.959, 1e-12);
  EXPECT_NEAR(r.q1, 0.91725, 1e-12);
  EXPECT_NEAR(r.q3, 0.994, 1e-12);
  EXPECT_NEAR(r.iqr, 0.07675, 1e-12);
}

TEST(Robustness, ConstantListHasZeroSpread) {
  std::vector<double> v(7, 0.42);
  EXPECT_EQ(robustness_stats(v).iqr, 0.0);
}

TEST(Robustness, EmptyIsAContractViolation) {
  EXPECT_THROW(robustness_stats(std::vector<double>{}), std::invalid_argument);
}

}  // namespace
}  // namespace ustep::eval
