#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/density.hpp"
#include "specgraph/distance.hpp"
#include "specgraph/parallel.hpp"
#include "specgraph/spectral.hpp"

namespace specgraph {

/// Labeled symmetric matrix of pairwise spectral distances, zero diagonal.
struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;  // row-major size() x size()

  int size() const { return static_cast<int>(labels.size()); }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * size() + j]; }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * size() + j]; }
};

/// All pairwise distances for a set of spectra. Each density is built once;
/// unordered pairs are evaluated concurrently and mirrored, so symmetry is
/// exact and the diagonal identically zero.
inline DistanceMatrix pairwise_distance_matrix(
    const std::vector<Spectrum>& spectra, std::vector<std::string> labels,
    double sigma, const GridSpec& grid) {
  const int k = static_cast<int>(spectra.size());
  if (static_cast<int>(labels.size()) != k)
    throw std::invalid_argument("label count does not match spectra count");
  DistanceMatrix m;
  m.labels = std::move(labels);
  m.values.assign(static_cast<std::size_t>(k) * k, 0.0);

  std::vector<SpectralDensity> densities(k);
  parallel_for(k, [&](int i) { densities[i] = build_density(spectra[i], sigma, grid); });

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  parallel_for(static_cast<int>(pairs.size()), [&](int p) {
    const auto [i, j] = pairs[p];
    const double d = l1_distance(densities[i], densities[j]);
    m.at(i, j) = d;
    m.at(j, i) = d;
  });
  return m;
}

// CSV with labels in the first row and column; caller-supplied comment
// lines (already prefixed with '#') go first.
inline void write_matrix_csv(const DistanceMatrix& m, std::ostream& out,
                             const std::vector<std::string>& comments = {}) {
  for (const auto& line : comments) out << line << "\n";
  out << "label";
  for (const auto& label : m.labels) out << "," << label;
  out << "\n";
  char buffer[64];
  for (int i = 0; i < m.size(); ++i) {
    out << m.labels[i];
    for (int j = 0; j < m.size(); ++j) {
      std::snprintf(buffer, sizeof(buffer), "%.17g", m.at(i, j));
      out << "," << buffer;
    }
    out << "\n";
  }
}

}  // namespace specgraph
