#include "specgraph/templates.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "specgraph/generators.hpp"

namespace specgraph {
namespace {

constexpr double kSigma = 0.05;

TEST(Templates, ArcsinePdfValueAtOne) {
  EXPECT_DOUBLE_EQ(arcsine_pdf(1.0), 1.0 / std::numbers::pi);
  EXPECT_DOUBLE_EQ(arcsine_pdf(-0.5), 0.0);
  EXPECT_DOUBLE_EQ(arcsine_pdf(2.5), 0.0);
}

TEST(Templates, DiracIsSingleKernel) {
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  const SpectralDensity d =
      class_template_density(DiracAtOne{}, kSigma, grid);
  EXPECT_NEAR(d.mass(), 1.0, 1e-6);
  // equals a one-atom spectrum smoothed with the same kernel
  const SpectralDensity atom = build_density(Spectrum{{1.0}, 1}, kSigma, grid);
  for (int i = 0; i < grid.count; ++i)
    EXPECT_NEAR(d.samples[i], atom.samples[i], 1e-12);
}

TEST(Templates, PetalMixtureHasEqualAtoms) {
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  const SpectralDensity d =
      class_template_density(PetalMixture{}, kSigma, grid);
  EXPECT_NEAR(d.mass(), 1.0, 1e-4);
  const SpectralDensity atoms =
      build_density(Spectrum{{0.5, 1.5}, 2}, kSigma, grid);
  for (int i = 0; i < grid.count; ++i)
    EXPECT_NEAR(d.samples[i], atoms.samples[i], 1e-12);
}

TEST(Templates, ArcsineSmoothingKeepsMassAndCenterValue) {
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  const SpectralDensity d =
      class_template_density(ArcsineClass{}, kSigma, grid);
  EXPECT_NEAR(d.mass(), 1.0, 1e-4);
  // flat region around x = 1: smoothing barely moves the value
  const int center = (int)std::llround((1.0 - grid.lo) / grid.step);
  EXPECT_NEAR(d.samples[center], arcsine_pdf(1.0), 0.01 * arcsine_pdf(1.0));
}

TEST(Templates, SemicircleMassAndSupportGuard) {
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  const SpectralDensity d =
      class_template_density(SemicircleClass{10.0}, kSigma, grid);
  EXPECT_NEAR(d.mass(), 1.0, 1e-4);
  EXPECT_THROW(class_template_density(SemicircleClass{4.0}, kSigma, grid),
               std::invalid_argument);
  EXPECT_THROW(class_template_density(SemicircleClass{3.0}, kSigma, grid),
               std::invalid_argument);
}

TEST(Templates, SemicircleComparisonDropsZeros) {
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  Spectrum s;
  s.values = {0.0, 0.0, 0.8, 1.0, 1.2, 1.4};
  s.graph_n = 6;
  const SemicircleComparison cmp = semicircle_distance(s, 10.0, kSigma, grid);
  EXPECT_NEAR(cmp.dropped_mass, 2.0 / 6.0, 1e-12);
  EXPECT_GT(cmp.distance, 0.0);
  EXPECT_LE(cmp.distance, 2.0);
}

TEST(Templates, ClassifyRanksFamiliesAtModerateSize) {
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  const auto path_rank =
      classify(closed_form_spectrum(Path{500}), kSigma, grid);
  EXPECT_TRUE(std::holds_alternative<ArcsineClass>(path_rank[0].first));
  const auto complete_rank =
      classify(closed_form_spectrum(Complete{500}), kSigma, grid);
  EXPECT_TRUE(std::holds_alternative<DiracAtOne>(complete_rank[0].first));
  const auto petal_rank =
      classify(closed_form_spectrum(Petal{249}), kSigma, grid);
  EXPECT_TRUE(std::holds_alternative<PetalMixture>(petal_rank[0].first));
  for (const auto& [t, d] : path_rank) EXPECT_GE(d, 0.0);
  // distances come out ascending
  for (std::size_t i = 1; i < path_rank.size(); ++i)
    EXPECT_LE(path_rank[i - 1].second, path_rank[i].second);
}

TEST(Templates, ClassifyTieBreakIsInputOrder) {
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  const Spectrum s = closed_form_spectrum(Complete{100});
  const std::vector<ClassTemplate> duplicated{DiracAtOne{}, ArcsineClass{},
                                              DiracAtOne{}};
  const auto ranked = classify(s, kSigma, grid, duplicated);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<DiracAtOne>(ranked[0].first));
  EXPECT_TRUE(std::holds_alternative<DiracAtOne>(ranked[1].first));
  EXPECT_EQ(ranked[0].second, ranked[1].second);
}

TEST(Templates, SemicircleMatchesRandomGraphBetterThanAtoms) {
  // an ER graph with mean degree 10 sits nearer the semicircle template
  // than either atom template
  const Spectrum s = spectrum(generate_er({600, 10.0}, 12));
  const GridSpec grid = GridSpec::for_sigma(kSigma);
  std::vector<ClassTemplate> templates{DiracAtOne{}, PetalMixture{},
                                       SemicircleClass{10.0}};
  const auto ranked = classify(s, kSigma, grid, templates);
  EXPECT_TRUE(std::holds_alternative<SemicircleClass>(ranked[0].first));
}

TEST(Templates, NamesAreStable) {
  EXPECT_EQ(template_name(DiracAtOne{}), "dirac-at-one");
  EXPECT_EQ(template_name(ArcsineClass{}), "arcsine");
  EXPECT_EQ(template_name(PetalMixture{}), "petal-mixture");
  EXPECT_EQ(template_name(SemicircleClass{8.0}).rfind("semicircle", 0), 0u);
}

}  // namespace
}  // namespace specgraph
