#include "specgraph/distance.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "specgraph/generators.hpp"
#include "specgraph/rng.hpp"

namespace specgraph {
namespace {

constexpr double kSigma = 0.05;

TEST(Distance, SelfDistanceIsZero) {
  const Spectrum s = spectrum(generate_er({50, 4.0}, 3));
  EXPECT_EQ(spectral_distance(s, s, kSigma), 0.0);
}

TEST(Distance, SymmetricExactly) {
  const Spectrum a = spectrum(make_star(12));
  const Spectrum b = spectrum(make_cycle(12));
  EXPECT_EQ(spectral_distance(a, b, kSigma), spectral_distance(b, a, kSigma));
}

TEST(Distance, TriangleInequality) {
  Rng rng(44);
  for (int round = 0; round < 5; ++round) {
    const Spectrum a = spectrum(generate_er({30, 3.0}, rng.next()));
    const Spectrum b = spectrum(generate_er({40, 4.0}, rng.next()));
    const Spectrum c = spectrum(generate_er({25, 2.0}, rng.next()));
    const double ab = spectral_distance(a, b, kSigma);
    const double bc = spectral_distance(b, c, kSigma);
    const double ac = spectral_distance(a, c, kSigma);
    EXPECT_LE(ac, ab + bc + 1e-9);
  }
}

TEST(Distance, BoundedByTwo) {
  const Spectrum a{{0.0}, 1};
  const Spectrum b{{2.0}, 1};
  const double d = spectral_distance(a, b, kSigma);
  EXPECT_GT(d, 1.99);
  EXPECT_LE(d, 2.0);
}

TEST(Distance, CospectralPairIsAtZero) {
  const Spectrum a = spectrum(make_complete_bipartite(2, 2));
  const Spectrum b = spectrum(make_cycle(4));
  EXPECT_LE(spectral_distance(a, b, kSigma), 1e-10);
}

TEST(Distance, LargeCompleteAndBipartiteAreNearlyCospectral) {
  // same limiting class: a point mass at 1
  const Spectrum a = closed_form_spectrum(Complete{2000});
  const Spectrum b = closed_form_spectrum(CompleteBipartite{1000, 1000});
  const double d = spectral_distance(a, b, kSigma);
  EXPECT_GT(d, 0.0);
  EXPECT_LT(d, 0.05);
}

TEST(Distance, StarPairMatchesClosedFormQuadrature) {
  // Star spectra are {0, 1^(n-2), 2}; the distance reduces to
  // |1/n - 1/n'| * integral of |K(x) + K(x-2) - 2 K(x-1)|, about 4|1/n-1/n'|
  // for well-separated kernels.
  const double expected_integrand = test_oracle::fine_trapezoid(
      [](double x) {
        auto kernel = [](double t) {
          return std::exp(-t * t / (2.0 * kSigma * kSigma)) /
                 (std::sqrt(2.0 * std::acos(-1.0)) * kSigma);
        };
        return std::fabs(kernel(x) + kernel(x - 2.0) - 2.0 * kernel(x - 1.0));
      },
      -0.2, 2.2, 200000);
  const double oracle = std::fabs(1.0 / 5 - 1.0 / 10) * expected_integrand;

  const Spectrum a = spectrum(make_star(5));
  const Spectrum b = spectrum(make_star(10));
  const double d = spectral_distance(a, b, kSigma);
  EXPECT_NEAR(d, oracle, 1e-6);
  EXPECT_NEAR(d, 0.4, 0.004);
}

TEST(Distance, MatchesBruteForceQuadratureOnRandomSpectra) {
  // independent check of the interval-mass integration: very fine plain
  // trapezoid over |rho_a - rho_b| evaluated straight from the atom sums
  Rng rng(314);
  for (int round = 0; round < 6; ++round) {
    const Spectrum a = spectrum(generate_er({35, 3.0}, rng.next()));
    const Spectrum b = spectrum(generate_er({50, 5.0}, rng.next()));
    auto abs_diff = [&](double x) {
      auto mixture = [&](const Spectrum& s) {
        double sum = 0.0;
        for (double lambda : s.values) {
          const double dx = x - lambda;
          sum += std::exp(-dx * dx / (2.0 * kSigma * kSigma));
        }
        return sum / (std::sqrt(2.0 * std::acos(-1.0)) * kSigma * s.size());
      };
      return std::fabs(mixture(a) - mixture(b));
    };
    const double oracle =
        test_oracle::fine_trapezoid(abs_diff, -0.2, 2.2, 400000);
    const double actual = spectral_distance(a, b, kSigma);
    EXPECT_NEAR(actual, oracle, 1e-7) << "round " << round;
  }
}

TEST(Distance, GridRefinementIsStable) {
  const Spectrum a = spectrum(make_star(20));
  const Spectrum b = spectrum(generate_er({60, 4.0}, 5));
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  const double coarse = spectral_distance(a, b, kSigma, grid);
  const double fine = spectral_distance(a, b, kSigma, grid.refined());
  EXPECT_NEAR(coarse, fine, 1e-6);
}

TEST(Distance, MismatchedGridsRejected) {
  const Spectrum s = spectrum(make_complete(5));
  const SpectralDensity a = build_density(s, kSigma);
  const SpectralDensity b =
      build_density(s, kSigma, GridSpec::for_sigma(kSigma).refined());
  EXPECT_THROW(l1_distance(a, b), data_error);
  const SpectralDensity c = build_density(s, 0.06);
  EXPECT_THROW(l1_distance(a, c), data_error);
}

TEST(Distance, EmptySpectrumRejected) {
  const Spectrum empty{{}, 0};
  const Spectrum s = spectrum(make_complete(3));
  EXPECT_THROW(spectral_distance(empty, s, kSigma), std::invalid_argument);
}

TEST(Interlacing, IdenticalSpectraAtShiftZero) {
  const Spectrum s = spectrum(generate_er({40, 4.0}, 9));
  const InterlacingReport report = check_interlacing(s, s, 0);
  EXPECT_TRUE(report.holds);
  EXPECT_FALSE(report.first_violation.has_value());
}

TEST(Interlacing, CompleteVersusDiamond) {
  const Spectrum k4 = spectrum(make_complete(4));
  const Spectrum diamond = spectrum(
      Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_TRUE(check_interlacing(k4, diamond, 1).holds);
}

TEST(Interlacing, ViolationReportedWithIndex) {
  const Spectrum k4 = spectrum(make_complete(4));
  const Spectrum p4 = spectrum(make_path(4));
  const InterlacingReport report = check_interlacing(k4, p4, 0);
  EXPECT_FALSE(report.holds);
  ASSERT_TRUE(report.first_violation.has_value());
  EXPECT_EQ(*report.first_violation, 1);
}

TEST(Interlacing, IsolatedVertexInsertionsShiftByTheirCount) {
  const Graph g = generate_er({30, 4.0}, 21);
  Graph padded = apply_edit(g, EditOp::insert_isolated_vertex());
  padded = apply_edit(padded, EditOp::insert_isolated_vertex());
  const Spectrum a = spectrum(g);
  const Spectrum b = spectrum(padded);
  EXPECT_TRUE(check_interlacing(a, b, 2).holds);
  EXPECT_TRUE(check_interlacing(b, a, 2).holds);
}

TEST(Interlacing, RejectsNegativeShift) {
  const Spectrum s = spectrum(make_complete(3));
  EXPECT_THROW(check_interlacing(s, s, -1), std::invalid_argument);
}

TEST(CubeBound, KnownValueAndLimits) {
  // 2 erf(sqrt(2)) at d = 11, sigma = 0.05
  const double bound = hypercube_distance_bound(11, 0.05);
  EXPECT_NEAR(bound, 2.0 * 0.954499736, 1e-6);
  EXPECT_NEAR(bound, 1.9091, 2e-4);
  // erf cross-check: series evaluation against the published table value
  EXPECT_NEAR(test_oracle::series_erf(1.41421), 0.95450, 1e-5);
  EXPECT_NEAR(test_oracle::series_erf(std::sqrt(2.0)), std::erf(std::sqrt(2.0)),
              1e-12);

  EXPECT_LT(hypercube_distance_bound(11, 1e6), 1e-5);
  EXPECT_LT(hypercube_distance_bound(4000, 0.05),
            hypercube_distance_bound(11, 0.05));
  EXPECT_THROW(hypercube_distance_bound(1, 0.05), std::invalid_argument);
}

}  // namespace
}  // namespace specgraph
