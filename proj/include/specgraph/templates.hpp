#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "specgraph/density.hpp"
#include "specgraph/distance.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

// Reference limit densities that large graph families converge to. Atoms are
// smoothed with the same Gaussian kernel as empirical spectra; continuous
// templates are convolved with the kernel numerically, so a template
// distance is the ordinary L1 distance against an idealized spectrum.

struct DiracAtOne {};
struct ArcsineClass {};
// Wigner-type semicircle centered at 1 with radius r = 2 / sqrt(avg_degree);
// needs avg_degree > 4 so the support stays inside [0, 2].
struct SemicircleClass {
  double avg_degree;
};
// Equal atoms at 1/2 and 3/2.
struct PetalMixture {};

using ClassTemplate =
    std::variant<DiracAtOne, ArcsineClass, SemicircleClass, PetalMixture>;

inline std::string template_name(const ClassTemplate& t) {
  if (std::holds_alternative<DiracAtOne>(t)) return "dirac-at-one";
  if (std::holds_alternative<ArcsineClass>(t)) return "arcsine";
  if (const auto* s = std::get_if<SemicircleClass>(&t))
    return "semicircle(avg_degree=" + std::to_string(s->avg_degree) + ")";
  return "petal-mixture";
}

/// Limit density of paths and cycles: 1 / (pi * sqrt(2x - x^2)) on (0, 2).
inline double arcsine_pdf(double x) {
  const double s = 2.0 * x - x * x;
  if (s <= 0) return 0.0;
  return 1.0 / (std::numbers::pi * std::sqrt(s));
}

inline double semicircle_pdf(double x, double radius) {
  const double s = radius * radius - (x - 1.0) * (x - 1.0);
  if (s <= 0) return 0.0;
  return 2.0 * std::sqrt(s) / (std::numbers::pi * radius * radius);
}

namespace template_detail {

inline double gauss(double x, double sigma) {
  return std::exp(-x * x / (2.0 * sigma * sigma)) /
         (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

// Smoothed arcsine density. Substituting y = 1 - cos(t) removes the endpoint
// singularities: rho(x) = (1/pi) * integral_0^pi K(x - 1 + cos t) dt. The
// same substitution yields the smoothed cumulative with the normal CDF in
// place of the kernel.
inline double smoothed_arcsine(double x, double sigma, int panels = 2000) {
  double sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double t = std::numbers::pi * i / panels;
    double term = gauss(x - 1.0 + std::cos(t), sigma);
    if (i == 0 || i == panels) term *= 0.5;
    sum += term;
  }
  return sum / panels;
}

inline double smoothed_arcsine_cdf(double x, double sigma, int panels = 2000) {
  double sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double t = std::numbers::pi * i / panels;
    double term =
        density_detail::normal_cdf((x - 1.0 + std::cos(t)) / sigma);
    if (i == 0 || i == panels) term *= 0.5;
    sum += term;
  }
  return sum / panels;
}

// Smoothed semicircle via y = 1 + r sin(u):
// rho(x) = (2/pi) * integral_{-pi/2}^{pi/2} cos^2(u) K(x - 1 - r sin u) du.
inline double smoothed_semicircle(double x, double sigma, double radius,
                                  int panels = 2000) {
  double sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double u =
        -std::numbers::pi / 2.0 + std::numbers::pi * i / panels;
    const double c = std::cos(u);
    double term = c * c * gauss(x - 1.0 - radius * std::sin(u), sigma);
    if (i == 0 || i == panels) term *= 0.5;
    sum += term;
  }
  return 2.0 * sum / panels;
}

inline double smoothed_semicircle_cdf(double x, double sigma, double radius,
                                      int panels = 2000) {
  double sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double u =
        -std::numbers::pi / 2.0 + std::numbers::pi * i / panels;
    const double c = std::cos(u);
    double term =
        c * c *
        density_detail::normal_cdf((x - 1.0 - radius * std::sin(u)) / sigma);
    if (i == 0 || i == panels) term *= 0.5;
    sum += term;
  }
  return 2.0 * sum / panels;
}

}  // namespace template_detail

inline SpectralDensity class_template_density(const ClassTemplate& t,
                                              double sigma,
                                              const GridSpec& grid) {
  density_detail::check_grid(sigma, grid);
  SpectralDensity d;
  d.sigma = sigma;
  d.grid = grid;
  if (std::holds_alternative<DiracAtOne>(t)) {
    d.pdf_at = [sigma](double x) {
      return template_detail::gauss(x - 1.0, sigma);
    };
    d.cdf_at = [sigma](double x) {
      return density_detail::normal_cdf((x - 1.0) / sigma);
    };
  } else if (std::holds_alternative<ArcsineClass>(t)) {
    d.pdf_at = [sigma](double x) {
      return template_detail::smoothed_arcsine(x, sigma);
    };
    d.cdf_at = [sigma](double x) {
      return template_detail::smoothed_arcsine_cdf(x, sigma);
    };
  } else if (const auto* semi = std::get_if<SemicircleClass>(&t)) {
    if (semi->avg_degree <= 4.0)
      throw std::invalid_argument(
          "semicircle needs avg_degree > 4 so the support stays in [0,2]");
    const double radius = 2.0 / std::sqrt(semi->avg_degree);
    d.pdf_at = [sigma, radius](double x) {
      return template_detail::smoothed_semicircle(x, sigma, radius);
    };
    d.cdf_at = [sigma, radius](double x) {
      return template_detail::smoothed_semicircle_cdf(x, sigma, radius);
    };
  } else {
    d.pdf_at = [sigma](double x) {
      return 0.5 * template_detail::gauss(x - 0.5, sigma) +
             0.5 * template_detail::gauss(x - 1.5, sigma);
    };
    d.cdf_at = [sigma](double x) {
      return 0.5 * density_detail::normal_cdf((x - 0.5) / sigma) +
             0.5 * density_detail::normal_cdf((x - 1.5) / sigma);
    };
  }
  d.samples.resize(grid.count);
  d.cumulative.resize(grid.count);
  for (int i = 0; i < grid.count; ++i) {
    d.samples[i] = d.pdf_at(grid.point(i));
    d.cumulative[i] = d.cdf_at(grid.point(i));
  }
  return d;
}

/// Distance from a spectrum to the semicircle template. The numerically zero
/// eigenvalues (|lambda| < 1e-7) are dropped and the rest renormalized
/// before smoothing; the dropped fraction is reported alongside.
struct SemicircleComparison {
  double distance = 0.0;
  double dropped_mass = 0.0;
};

inline SemicircleComparison semicircle_distance(const Spectrum& s,
                                                double avg_degree,
                                                double sigma,
                                                const GridSpec& grid) {
  Spectrum reduced;
  reduced.graph_n = s.graph_n;
  for (double v : s.values)
    if (std::fabs(v) >= 1e-7) reduced.values.push_back(v);
  const double dropped =
      static_cast<double>(s.size() - reduced.size()) / s.size();
  if (reduced.size() == 0)
    throw data_error("spectrum is entirely zero, nothing to compare");
  const SpectralDensity rho = build_density(reduced, sigma, grid);
  const SpectralDensity tpl =
      class_template_density(SemicircleClass{avg_degree}, sigma, grid);
  return {l1_distance(rho, tpl), dropped};
}

inline std::vector<ClassTemplate> default_class_templates() {
  return {DiracAtOne{}, ArcsineClass{}, PetalMixture{}};
}

/// Distances from the spectrum's density to each template, ascending.
/// Ties keep the order the templates were given in.
inline std::vector<std::pair<ClassTemplate, double>> classify(
    const Spectrum& s, double sigma, const GridSpec& grid,
    const std::vector<ClassTemplate>& templates = default_class_templates()) {
  const SpectralDensity rho = build_density(s, sigma, grid);
  std::vector<std::pair<ClassTemplate, double>> ranked;
  ranked.reserve(templates.size());
  for (const auto& t : templates) {
    double d;
    if (const auto* semi = std::get_if<SemicircleClass>(&t))
      d = semicircle_distance(s, semi->avg_degree, sigma, grid).distance;
    else
      d = l1_distance(rho, class_template_density(t, sigma, grid));
    ranked.emplace_back(t, d);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second < b.second;
                   });
  return ranked;
}

inline std::vector<std::pair<ClassTemplate, double>> classify(
    const Spectrum& s, double sigma) {
  return classify(s, sigma, GridSpec::for_sigma(sigma));
}

}  // namespace specgraph
