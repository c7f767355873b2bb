#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace specgraph {

/// Least-squares fit of log(distance) against log(size), used to read off
/// empirical convergence rates. Requires at least 4 points and strictly
/// positive distances.
struct RateFit {
  std::vector<double> sizes;
  std::vector<double> distances;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of log-space residuals
};

inline std::optional<RateFit> fit_log_log(const std::vector<double>& sizes,
                                          const std::vector<double>& distances) {
  if (sizes.size() != distances.size())
    throw std::invalid_argument("sizes and distances differ in length");
  if (sizes.size() < 4) return std::nullopt;
  for (double d : distances)
    if (!(d > 0)) return std::nullopt;
  for (double n : sizes)
    if (!(n > 0)) throw std::invalid_argument("sizes must be positive");

  const std::size_t count = sizes.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = std::log(sizes[i]);
    const double y = std::log(distances[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  RateFit fit;
  fit.sizes = sizes;
  fit.distances = distances;
  fit.slope = (count * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / count;
  double ss = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const double r = std::log(distances[i]) -
                     (fit.slope * std::log(sizes[i]) + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / count);
  return fit;
}

}  // namespace specgraph
