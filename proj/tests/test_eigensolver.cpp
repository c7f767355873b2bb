#include "specgraph/eigensolver.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "specgraph/rng.hpp"

namespace specgraph {
namespace {

TEST(Eigensolver, TwoByTwo) {
  std::vector<double> a{1.0, -1.0, -1.0, 1.0};
  const auto values = symmetric_eigenvalues(a, 2);
  ASSERT_EQ(values.size(), 2u);
  EXPECT_NEAR(values[0], 0.0, 1e-14);
  EXPECT_NEAR(values[1], 2.0, 1e-14);
}

TEST(Eigensolver, OneByOne) {
  std::vector<double> a{3.5};
  const auto values = symmetric_eigenvalues(a, 1);
  ASSERT_EQ(values.size(), 1u);
  EXPECT_DOUBLE_EQ(values[0], 3.5);
}

TEST(Eigensolver, DiagonalMatrix) {
  std::vector<double> a{2, 0, 0, 0, -1, 0, 0, 0, 5};
  const auto values = symmetric_eigenvalues(a, 3);
  EXPECT_NEAR(values[0], -1.0, 1e-14);
  EXPECT_NEAR(values[1], 2.0, 1e-14);
  EXPECT_NEAR(values[2], 5.0, 1e-14);
}

TEST(Eigensolver, MatchesJacobiOracleOnRandomMatrices) {
  Rng rng(1234);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + (int)rng.next_below(14);
    std::vector<double> a(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        const double x = 2.0 * rng.next_double() - 1.0;
        a[i * n + j] = x;
        a[j * n + i] = x;
      }
    const auto expected = test_oracle::jacobi_eigenvalues(a, n);
    auto working = a;
    const auto actual = symmetric_eigenvalues(working, n);
    ASSERT_EQ(actual.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      EXPECT_NEAR(actual[i], expected[i], 1e-10) << "round " << round;
  }
}

TEST(Eigensolver, EigenvalueSumMatchesTrace) {
  Rng rng(77);
  const int n = 40;
  std::vector<double> a(n * n);
  double trace = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double x = 2.0 * rng.next_double() - 1.0;
      a[i * n + j] = x;
      a[j * n + i] = x;
      if (i == j) trace += x;
    }
  const auto values = symmetric_eigenvalues(a, n);
  double sum = 0.0;
  for (double v : values) sum += v;
  EXPECT_NEAR(sum, trace, 1e-10);
}

TEST(Eigensolver, ReportsNonConvergence) {
  Rng rng(5);
  const int n = 12;
  std::vector<double> a(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double x = rng.next_double();
      a[i * n + j] = x;
      a[j * n + i] = x;
    }
  EXPECT_THROW(symmetric_eigenvalues(a, n, 0), numeric_error);
}

TEST(Eigensolver, RejectsBadInput) {
  std::vector<double> a{1.0};
  EXPECT_THROW(symmetric_eigenvalues(a, 0), std::invalid_argument);
  EXPECT_THROW(symmetric_eigenvalues(a, 2), std::invalid_argument);
}

}  // namespace
}  // namespace specgraph
