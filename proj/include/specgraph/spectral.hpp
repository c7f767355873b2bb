#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "specgraph/eigensolver.hpp"
#include "specgraph/errors.hpp"
#include "specgraph/generators.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

/// Sorted eigenvalues of a normalized Laplacian, all in [0, 2]. The values
/// carry the uniform probability measure (1/size) * sum of Dirac atoms, which
/// is what integrate_measure and empirical_cdf evaluate. graph_n records the
/// vertex count of the source graph; for vertex spectra it equals size().
struct Spectrum {
  std::vector<double> values;
  int graph_n = 0;

  int size() const { return static_cast<int>(values.size()); }
};

// Dense eigendecomposition refuses above this size instead of approximating.
inline constexpr int kDefaultSpectrumCap = 10000;

/// Symmetric normalized Laplacian I - D^{-1/2} A D^{-1/2}, row-major n*n.
/// Rows of isolated vertices are identically zero, so each isolated vertex
/// contributes eigenvalue 0.
inline std::vector<double> normalized_laplacian(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("laplacian of an empty graph");
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> inv_sqrt_degree(n, 0.0);
  for (int v = 0; v < n; ++v) {
    const int deg = g.degree(v);
    if (deg > 0) {
      inv_sqrt_degree[v] = 1.0 / std::sqrt(static_cast<double>(deg));
      a[static_cast<std::size_t>(v) * n + v] = 1.0;
    }
  }
  for (const auto& [u, v] : g.edges()) {
    const double w = -inv_sqrt_degree[u] * inv_sqrt_degree[v];
    a[static_cast<std::size_t>(u) * n + v] = w;
    a[static_cast<std::size_t>(v) * n + u] = w;
  }
  return a;
}

namespace detail {

inline std::vector<double> clamp_to_spectrum_range(std::vector<double> values,
                                                   double tolerance = 1e-9) {
  for (double& x : values) {
    if (x < -tolerance || x > 2.0 + tolerance)
      throw numeric_error("eigenvalue " + std::to_string(x) +
                          " outside [0,2] beyond tolerance");
    x = std::clamp(x, 0.0, 2.0);
  }
  return values;
}

}  // namespace detail

/// Full spectrum of the normalized Laplacian, ascending, clamped to [0, 2]
/// after a 1e-9 range check. Graphs above max_n are refused.
inline Spectrum spectrum(const Graph& g, int max_n = kDefaultSpectrumCap) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("spectrum of an empty graph");
  if (n > max_n)
    throw data_error("graph size " + std::to_string(n) +
                     " exceeds the eigensolver cap " + std::to_string(max_n));
  std::vector<double> a = normalized_laplacian(g);
  std::vector<double> values = symmetric_eigenvalues(a, n);
  return {detail::clamp_to_spectrum_range(std::move(values)), n};
}

namespace detail {

inline double binomial(int n, int k) {
  double result = 1.0;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace detail

/// Exact spectra of the families that admit one. KRegularTree and
/// DuplicatedCycle (and random models) have none and are rejected.
inline Spectrum closed_form_spectrum(const FamilySpec& spec) {
  std::vector<double> values;
  int n = 0;
  if (const auto* complete = std::get_if<Complete>(&spec)) {
    n = complete->n;
    detail::require(n >= 1, "complete graph needs n >= 1");
    values.push_back(0.0);
    for (int i = 1; i < n; ++i) values.push_back(n / (n - 1.0));
  } else if (const auto* bip = std::get_if<CompleteBipartite>(&spec)) {
    detail::require(bip->n1 >= 1 && bip->n2 >= 1,
                    "complete bipartite needs n1, n2 >= 1");
    n = bip->n1 + bip->n2;
    values.push_back(0.0);
    for (int i = 0; i < n - 2; ++i) values.push_back(1.0);
    values.push_back(2.0);
  } else if (const auto* star = std::get_if<Star>(&spec)) {
    detail::require(star->n >= 2, "star needs n >= 2");
    return closed_form_spectrum(CompleteBipartite{1, star->n - 1});
  } else if (const auto* path = std::get_if<Path>(&spec)) {
    n = path->n;
    detail::require(n >= 1, "path needs n >= 1");
    if (n == 1) {
      values.push_back(0.0);
    } else {
      for (int k = 0; k < n; ++k)
        values.push_back(1.0 - std::cos(std::numbers::pi * k / (n - 1)));
    }
  } else if (const auto* cycle = std::get_if<Cycle>(&spec)) {
    n = cycle->n;
    detail::require(n >= 3, "cycle needs n >= 3");
    for (int k = 0; k < n; ++k)
      values.push_back(1.0 - std::cos(2.0 * std::numbers::pi * k / n));
  } else if (const auto* cube = std::get_if<Hypercube>(&spec)) {
    const int d = cube->d;
    detail::require(d >= 1 && d < 26, "hypercube dimension out of range");
    n = 1 << d;
    for (int k = 0; k <= d; ++k) {
      const double lambda = 2.0 * k / d;
      const long long mult = std::llround(detail::binomial(d, k));
      for (long long i = 0; i < mult; ++i) values.push_back(lambda);
    }
  } else if (const auto* petal = std::get_if<Petal>(&spec)) {
    const int m = petal->m;
    detail::require(m >= 1, "petal needs m >= 1");
    n = 2 * m + 1;
    values.push_back(0.0);
    for (int i = 0; i < m - 1; ++i) values.push_back(0.5);
    for (int i = 0; i < m + 1; ++i) values.push_back(1.5);
  } else {
    throw std::invalid_argument("family has no closed-form spectrum");
  }
  std::sort(values.begin(), values.end());
  return {detail::clamp_to_spectrum_range(std::move(values)), n};
}

/// Integral of f against the spectral measure: (1/size) * sum f(lambda_i).
template <typename F>
double integrate_measure(const Spectrum& s, F&& f) {
  if (s.size() == 0) throw std::invalid_argument("empty spectrum");
  double sum = 0.0;
  for (double lambda : s.values) sum += f(lambda);
  return sum / s.size();
}

/// Measure of [0, x]: the fraction of eigenvalues <= x.
inline double empirical_cdf(const Spectrum& s, double x) {
  if (s.size() == 0) throw std::invalid_argument("empty spectrum");
  const auto it =
      std::upper_bound(s.values.begin(), s.values.end(), x);
  return static_cast<double>(it - s.values.begin()) / s.size();
}

/// Spectrum of the normalized Laplacian on edges, derived from the vertex
/// spectrum: the nonzero part is identical, while the multiplicity of the
/// eigenvalue 0 becomes |E| - |V| + c (c = component count), counting
/// independent cycles. Result length is |E|.
inline Spectrum edge_laplacian_spectrum(const Graph& g,
                                        int max_n = kDefaultSpectrumCap) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("edge Laplacian needs at least one edge");
  const int c = connected_components(g).count;
  const int zero_mult = g.edge_count() - g.vertex_count() + c;
  Spectrum vertex = spectrum(g, max_n);
  // The c smallest vertex eigenvalues are the exact zeros.
  std::vector<double> values(zero_mult, 0.0);
  values.insert(values.end(), vertex.values.begin() + c, vertex.values.end());
  return {std::move(values), g.vertex_count()};
}

// Spectrum CSV: "# n <count>" header, one eigenvalue per line at full
// double precision.
inline void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
  out << "# n " << s.size() << "\n";
  char buffer[64];
  for (double v : s.values) {
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    out << buffer << "\n";
  }
}

inline Spectrum read_spectrum_csv(std::istream& in) {
  std::string line;
  long line_no = 0;
  std::vector<double> values;
  long long declared = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') {
      std::istringstream fields(line.substr(pos + 1));
      std::string key;
      fields >> key;
      if (key == "n") fields >> declared;
      continue;
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(line.substr(pos), &used);
      if (line.find_first_not_of(" \t\r", pos + used) != std::string::npos)
        throw std::invalid_argument("trailing characters");
      values.push_back(v);
    } catch (const std::exception&) {
      throw parse_error("line " + std::to_string(line_no) +
                            ": expected an eigenvalue, got '" + line + "'",
                        line_no);
    }
  }
  if (declared >= 0 && declared != static_cast<long long>(values.size()))
    throw parse_error("header declares " + std::to_string(declared) +
                          " eigenvalues, file has " +
                          std::to_string(values.size()),
                      line_no);
  std::sort(values.begin(), values.end());
  const int n = static_cast<int>(values.size());
  return {std::move(values), n};
}

}  // namespace specgraph
