#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/errors.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

/// Uniform sample grid: points lo, lo + step, ..., lo + step * (count - 1).
struct GridSpec {
  double lo = 0.0;
  double step = 0.0;
  int count = 0;

  double hi() const { return lo + step * (count - 1); }
  double point(int i) const { return lo + step * i; }

  bool operator==(const GridSpec&) const = default;

  static GridSpec over(double lo, double hi, double step) {
    if (step <= 0 || hi <= lo)
      throw std::invalid_argument("grid needs hi > lo and step > 0");
    const int count = static_cast<int>(std::ceil((hi - lo) / step - 1e-9)) + 1;
    return {lo, step, count};
  }

  // Default grid for bandwidth sigma: [-4*sigma, 2 + 4*sigma], step sigma/20.
  // Covers all but < 1e-4 of every kernel's mass for spectra in [0, 2].
  static GridSpec for_sigma(double sigma, double step = 0.0) {
    if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
    if (step <= 0) step = sigma / 20.0;
    return over(-4.0 * sigma, 2.0 + 4.0 * sigma, step);
  }

  GridSpec refined() const { return {lo, step / 2.0, 2 * (count - 1) + 1}; }
};

// Compensated trapezoid sum over uniformly spaced samples.
inline double trapezoid(const std::vector<double>& samples, double step) {
  if (samples.size() < 2) return 0.0;
  double sum = 0.0, carry = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double term = samples[i];
    if (i == 0 || i + 1 == samples.size()) term *= 0.5;
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum * step;
}

/// Gaussian-smoothed spectral density at a point:
/// (1/size) * sum_i N(x; lambda_i, sigma^2).
inline double density(const Spectrum& s, double sigma, double x) {
  if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
  if (s.size() == 0) throw std::invalid_argument("empty spectrum");
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  double sum = 0.0;
  for (double lambda : s.values) {
    const double dx = x - lambda;
    sum += std::exp(-dx * dx * inv2s2);
  }
  return sum * norm / s.size();
}

/// A spectral density sampled on a grid. Besides the point samples it keeps
/// the smoothed cumulative at the grid points plus exact point evaluators,
/// which the L1 distance uses to integrate interval masses without
/// quadrature error. The grid must extend at least 4*sigma past [0, 2] and
/// resolve the kernel with step <= sigma/10, so the trapezoid mass of any
/// spectrum in [0, 2] lands in [1 - 1e-4, 1].
struct SpectralDensity {
  double sigma = 0.0;
  GridSpec grid;
  std::vector<double> samples;
  std::vector<double> cumulative;
  std::function<double(double)> pdf_at;
  std::function<double(double)> cdf_at;

  double mass() const { return trapezoid(samples, grid.step); }
};

namespace density_detail {

inline void check_grid(double sigma, const GridSpec& grid) {
  if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
  if (grid.count < 2) throw std::invalid_argument("grid needs >= 2 points");
  if (grid.lo > -4.0 * sigma + 1e-12)
    throw std::invalid_argument("grid must start at or below -4*sigma");
  if (grid.hi() < 2.0 + 4.0 * sigma - 1e-12)
    throw std::invalid_argument("grid must end at or above 2 + 4*sigma");
  if (grid.step > sigma / 10.0 + 1e-15)
    throw std::invalid_argument("grid step too coarse, need step <= sigma/10");
}

inline double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

}  // namespace density_detail

inline SpectralDensity build_density(const Spectrum& s, double sigma,
                                     const GridSpec& grid) {
  density_detail::check_grid(sigma, grid);
  if (s.size() == 0) throw std::invalid_argument("empty spectrum");
  const auto atoms = std::make_shared<const std::vector<double>>(s.values);
  const double weight = 1.0 / static_cast<double>(atoms->size());

  SpectralDensity d;
  d.sigma = sigma;
  d.grid = grid;
  d.pdf_at = [atoms, sigma, weight](double x) {
    const double norm =
        weight / (std::sqrt(2.0 * std::numbers::pi) * sigma);
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    double sum = 0.0;
    for (double lambda : *atoms) {
      const double dx = x - lambda;
      sum += std::exp(-dx * dx * inv2s2);
    }
    return sum * norm;
  };
  d.cdf_at = [atoms, sigma, weight](double x) {
    double sum = 0.0;
    for (double lambda : *atoms)
      sum += density_detail::normal_cdf((x - lambda) / sigma);
    return sum * weight;
  };
  d.samples.resize(grid.count);
  d.cumulative.resize(grid.count);
  for (int i = 0; i < grid.count; ++i) {
    d.samples[i] = d.pdf_at(grid.point(i));
    d.cumulative[i] = d.cdf_at(grid.point(i));
  }
  return d;
}

inline SpectralDensity build_density(const Spectrum& s, double sigma) {
  return build_density(s, sigma, GridSpec::for_sigma(sigma));
}

// Density CSV: "# sigma <s> lo <lo> hi <hi> h <h>" then "x,rho" rows.
inline void write_density_csv(const SpectralDensity& d, std::ostream& out) {
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer), "# sigma %.17g lo %.17g hi %.17g h %.17g",
                d.sigma, d.grid.lo, d.grid.hi(), d.grid.step);
  out << buffer << "\n";
  for (int i = 0; i < d.grid.count; ++i) {
    std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g", d.grid.point(i),
                  d.samples[i]);
    out << buffer << "\n";
  }
}

}  // namespace specgraph
