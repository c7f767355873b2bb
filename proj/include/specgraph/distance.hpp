#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "specgraph/density.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

namespace distance_detail {

// Root of the difference pdf inside [lo, hi] where the endpoint values have
// opposite signs. Safeguarded regula falsi; symmetric in the two densities,
// so swapping the arguments lands on the bitwise-identical root.
inline double crossing_point(const SpectralDensity& a,
                             const SpectralDensity& b, double lo, double hi,
                             double flo, double fhi) {
  for (int iter = 0; iter < 24; ++iter) {
    double mid = (lo * fhi - hi * flo) / (fhi - flo);
    // keep the iterate inside; fall back to bisection when it degenerates
    if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    const double fmid = a.pdf_at(mid) - b.pdf_at(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
    if (hi - lo < 1e-13) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace distance_detail

/// L1 distance between two densities sampled on the same grid with the same
/// bandwidth. This is a pseudometric: cospectral graphs sit at distance 0.
///
/// The integrand |rho_a - rho_b| changes sign between grid points, so a
/// plain trapezoid sum of |samples| stalls at O(step^2) around each
/// crossing. Instead every grid interval contributes its exact mass
/// difference (from the smoothed cumulatives); intervals with a sign change
/// are split at the root of the difference before taking absolute values.
/// Refining the grid then only sharpens the crossing brackets.
inline double l1_distance(const SpectralDensity& a, const SpectralDensity& b) {
  if (a.sigma != b.sigma) throw data_error("mismatched sigma");
  if (!(a.grid == b.grid)) throw data_error("mismatched grids");
  if (!a.cdf_at || !b.cdf_at || !a.pdf_at || !b.pdf_at)
    throw std::invalid_argument("density lacks its point evaluators");
  double sum = 0.0, carry = 0.0;
  auto add = [&](double piece) {
    const double y = piece - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };
  for (int i = 0; i + 1 < a.grid.count; ++i) {
    const double f0 = a.samples[i] - b.samples[i];
    const double f1 = a.samples[i + 1] - b.samples[i + 1];
    const double mass0 = a.cumulative[i] - b.cumulative[i];
    const double mass1 = a.cumulative[i + 1] - b.cumulative[i + 1];
    if (f0 * f1 >= 0.0) {
      add(std::fabs(mass1 - mass0));
    } else {
      const double c = distance_detail::crossing_point(
          a, b, a.grid.point(i), a.grid.point(i + 1), f0, f1);
      const double mass_c = a.cdf_at(c) - b.cdf_at(c);
      add(std::fabs(mass_c - mass0));
      add(std::fabs(mass1 - mass_c));
    }
  }
  return sum;
}

/// Spectral distance of two spectra: the L1 distance of their
/// Gaussian-smoothed densities on the shared grid. Always in [0, 2].
inline double spectral_distance(const Spectrum& a, const Spectrum& b,
                                double sigma, const GridSpec& grid) {
  return l1_distance(build_density(a, sigma, grid),
                     build_density(b, sigma, grid));
}

inline double spectral_distance(const Spectrum& a, const Spectrum& b,
                                double sigma) {
  return spectral_distance(a, b, sigma, GridSpec::for_sigma(sigma));
}

/// Result of an interlacing check between the spectra of two graphs related
/// by a bounded number of edits.
struct InterlacingReport {
  int shift = 0;
  bool holds = false;
  std::optional<int> first_violation;
};

/// Verifies lambda_{i-C} <= theta_i <= lambda_{i+C} for every index i of b's
/// spectrum (theta), reading a's spectrum (lambda) with the boundary
/// convention lambda_j = 0 for j < 0 and lambda_j = 2 for j >= size.
inline InterlacingReport check_interlacing(const Spectrum& a,
                                           const Spectrum& b, int shift,
                                           double tolerance = 1e-9) {
  if (shift < 0) throw std::invalid_argument("shift must be nonnegative");
  const auto lambda = [&](long j) -> double {
    if (j < 0) return 0.0;
    if (j >= a.size()) return 2.0;
    return a.values[j];
  };
  InterlacingReport report{shift, true, std::nullopt};
  for (int i = 0; i < b.size(); ++i) {
    const double theta = b.values[i];
    if (theta < lambda(static_cast<long>(i) - shift) - tolerance ||
        theta > lambda(static_cast<long>(i) + shift) + tolerance) {
      report.holds = false;
      report.first_violation = i;
      break;
    }
  }
  return report;
}

/// Upper bound on the spectral distance between the (d-1)- and d-dimensional
/// hypercubes: 2 * erf(2 / ((d-1) * 2 * sigma * sqrt(2))).
inline double hypercube_distance_bound(int d, double sigma) {
  if (d < 2) throw std::invalid_argument("bound needs dimension >= 2");
  if (sigma <= 0) throw std::invalid_argument("sigma must be positive");
  return 2.0 * std::erf(2.0 / ((d - 1) * 2.0 * sigma * std::sqrt(2.0)));
}

}  // namespace specgraph
