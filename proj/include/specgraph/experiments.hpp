#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/density.hpp"
#include "specgraph/distance.hpp"
#include "specgraph/generators.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/parallel.hpp"
#include "specgraph/rate_fit.hpp"
#include "specgraph/rng.hpp"
#include "specgraph/spectral.hpp"
#include "specgraph/version.hpp"

namespace specgraph {

// Experiment drivers: distance-versus-size curves for same-model and
// cross-model graph groups, the k-regular-tree analogue, and log-log
// convergence-rate fits. Every run is a pure function of its parameter
// struct, so reruns emit byte-identical CSV.

namespace experiment_detail {

inline std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

inline std::vector<Spectrum> spectra_of(const std::vector<Graph>& graphs,
                                        int cap) {
  std::vector<Spectrum> out(graphs.size());
  parallel_for(static_cast<int>(graphs.size()),
               [&](int i) { out[i] = spectrum(graphs[i], cap); });
  return out;
}

}  // namespace experiment_detail

// ---------------------------------------------------------------------------
// Growth experiment: groups of same-model graphs grown from independent
// starts, plus a contrast group from the other model with matched average
// degree. Curves record D(G^1_0, G^g_i) against the size of G^g_i.

struct GrowthParams {
  std::string model = "ba";  // "ba" or "er"
  int groups = 2;
  int base_n = 1000;
  int steps = 4;
  int step_size = 250;
  double avg_degree = 4.0;
  int ba_init = 5;
  std::uint64_t seed = 1;
  double sigma = 0.05;
  double grid_step = 0.0;  // 0 selects sigma / 20
  int eigensolver_cap = kDefaultSpectrumCap;
};

struct GrowthResult {
  GrowthParams params;
  GridSpec grid;
  std::vector<int> sizes;                         // size of G^g_i per step
  std::vector<std::vector<double>> group_curves;  // [group][step]
  std::vector<double> contrast;                   // other-model curve
};

inline GrowthResult run_growth_experiment(const GrowthParams& p) {
  if (p.model != "ba" && p.model != "er")
    throw std::invalid_argument("growth model must be 'ba' or 'er'");
  if (p.groups < 2) throw std::invalid_argument("growth needs >= 2 groups");
  if (p.steps < 1 || p.step_size < 1 || p.base_n < 2)
    throw std::invalid_argument("invalid growth geometry");
  const int ba_m =
      std::max(1, static_cast<int>(std::llround(p.avg_degree / 2.0)));
  const Rng root(p.seed);

  GrowthResult result;
  result.params = p;
  result.grid = GridSpec::for_sigma(p.sigma, p.grid_step);
  for (int i = 0; i <= p.steps; ++i)
    result.sizes.push_back(p.base_n + i * p.step_size);

  // Same-model groups, grown step by step; group g at step i has a
  // deterministic stream fork so any curve can be regenerated alone.
  std::vector<std::vector<Graph>> group_graphs(p.groups);
  for (int g = 0; g < p.groups; ++g) {
    Graph current =
        p.model == "ba"
            ? generate_ba({p.base_n, ba_m, p.ba_init},
                          root.fork(1000 * (g + 1)).seed())
            : generate_er({p.base_n, p.avg_degree},
                          root.fork(1000 * (g + 1)).seed());
    group_graphs[g].push_back(current);
    for (int i = 1; i <= p.steps; ++i) {
      if (p.model == "ba") {
        current = grow(current, result.sizes[i], PreferentialAttachment{ba_m},
                       root.fork(1000 * (g + 1) + i).seed());
      } else {
        current = generate_er({result.sizes[i], p.avg_degree},
                              root.fork(1000 * (g + 1) + i).seed());
      }
      group_graphs[g].push_back(current);
    }
  }

  // Contrast group from the other model, matching size and measured average
  // degree of the first group's graph at each step.
  std::vector<Graph> contrast_graphs;
  for (int i = 0; i <= p.steps; ++i) {
    const double matched = average_degree(group_graphs[0][i]);
    if (p.model == "ba") {
      contrast_graphs.push_back(
          generate_er({result.sizes[i], matched},
                      root.fork((1ULL << 32) + i).seed()));
    } else {
      const int m = std::max(1, static_cast<int>(std::llround(matched / 2.0)));
      contrast_graphs.push_back(
          generate_ba({result.sizes[i], m, std::max(p.ba_init, m)},
                      root.fork((1ULL << 32) + i).seed()));
    }
  }

  std::vector<Graph> all;
  for (const auto& graphs : group_graphs)
    all.insert(all.end(), graphs.begin(), graphs.end());
  all.insert(all.end(), contrast_graphs.begin(), contrast_graphs.end());
  const std::vector<Spectrum> spectra =
      experiment_detail::spectra_of(all, p.eigensolver_cap);

  const SpectralDensity reference =
      build_density(spectra[0], p.sigma, result.grid);
  auto curve_against_reference = [&](int offset) {
    std::vector<double> curve(p.steps + 1);
    parallel_for(p.steps + 1, [&](int i) {
      curve[i] = l1_distance(
          reference, build_density(spectra[offset + i], p.sigma, result.grid));
    });
    return curve;
  };
  for (int g = 0; g < p.groups; ++g)
    result.group_curves.push_back(curve_against_reference(g * (p.steps + 1)));
  result.contrast = curve_against_reference(p.groups * (p.steps + 1));
  return result;
}

inline void write_growth_csv(const GrowthResult& r, std::ostream& out) {
  using experiment_detail::fmt;
  const auto& p = r.params;
  out << "# specgraph " << kVersion << "\n";
  out << "# experiment growth\n";
  out << "# model " << p.model << "\n";
  out << "# groups " << p.groups << "\n";
  out << "# base_n " << p.base_n << "\n";
  out << "# steps " << p.steps << "\n";
  out << "# step_size " << p.step_size << "\n";
  out << "# avg_degree " << fmt(p.avg_degree) << "\n";
  out << "# ba_init " << p.ba_init << "\n";
  out << "# seed " << p.seed << "\n";
  out << "# sigma " << fmt(p.sigma) << "\n";
  out << "# grid_step " << fmt(r.grid.step) << "\n";
  out << "size";
  for (int g = 0; g < p.groups; ++g) out << ",group" << (g + 1);
  out << ",contrast\n";
  for (std::size_t i = 0; i < r.sizes.size(); ++i) {
    out << r.sizes[i];
    for (const auto& curve : r.group_curves) out << "," << fmt(curve[i]);
    out << "," << fmt(r.contrast[i]) << "\n";
  }
}

// ---------------------------------------------------------------------------
// Tree experiment: complete k-regular trees truncated breadth-first to sizes
// (i+1) * base_size. Same-k curves compare against the base tree; cross-k
// curves compare equal-size trees of different k.

struct TreesParams {
  std::vector<int> ks = {3, 4};
  int base_size = 100;
  int steps = 19;
  double sigma = 0.05;
  double grid_step = 0.0;
  int eigensolver_cap = kDefaultSpectrumCap;
};

struct TreesResult {
  TreesParams params;
  GridSpec grid;
  std::vector<int> sizes;
  std::vector<std::vector<double>> same_k;  // [k index][step], against the base
  std::vector<std::vector<double>> step_k;  // [k index][step], consecutive sizes
  std::vector<std::pair<std::pair<int, int>, std::vector<double>>> cross;
};

inline TreesResult run_trees_experiment(const TreesParams& p) {
  if (p.ks.size() < 1) throw std::invalid_argument("need at least one k");
  for (int k : p.ks)
    if (k < 3) throw std::invalid_argument("k-regular trees need k >= 3");
  if (p.base_size < 2 || p.steps < 1)
    throw std::invalid_argument("invalid tree experiment geometry");

  TreesResult result;
  result.params = p;
  result.grid = GridSpec::for_sigma(p.sigma, p.grid_step);
  for (int i = 0; i <= p.steps; ++i)
    result.sizes.push_back((i + 1) * p.base_size);

  std::vector<Graph> trees;
  for (int k : p.ks)
    for (int size : result.sizes)
      trees.push_back(make_k_regular_tree_by_size(k, size));
  const std::vector<Spectrum> spectra =
      experiment_detail::spectra_of(trees, p.eigensolver_cap);
  const int per_k = p.steps + 1;

  std::vector<SpectralDensity> densities(spectra.size());
  parallel_for(static_cast<int>(spectra.size()), [&](int i) {
    densities[i] = build_density(spectra[i], p.sigma, result.grid);
  });

  for (std::size_t ki = 0; ki < p.ks.size(); ++ki) {
    std::vector<double> base_curve(per_k), step_curve(per_k, 0.0);
    for (int i = 0; i < per_k; ++i) {
      base_curve[i] =
          l1_distance(densities[ki * per_k], densities[ki * per_k + i]);
      if (i > 0)
        step_curve[i] = l1_distance(densities[ki * per_k + i - 1],
                                    densities[ki * per_k + i]);
    }
    result.same_k.push_back(std::move(base_curve));
    result.step_k.push_back(std::move(step_curve));
  }
  for (std::size_t a = 0; a < p.ks.size(); ++a)
    for (std::size_t b = a + 1; b < p.ks.size(); ++b) {
      std::vector<double> curve(per_k);
      for (int i = 0; i < per_k; ++i)
        curve[i] =
            l1_distance(densities[a * per_k + i], densities[b * per_k + i]);
      result.cross.push_back({{p.ks[a], p.ks[b]}, std::move(curve)});
    }
  return result;
}

inline void write_trees_csv(const TreesResult& r, std::ostream& out) {
  using experiment_detail::fmt;
  const auto& p = r.params;
  out << "# specgraph " << kVersion << "\n";
  out << "# experiment trees\n";
  out << "# ks";
  for (int k : p.ks) out << " " << k;
  out << "\n";
  out << "# base_size " << p.base_size << "\n";
  out << "# steps " << p.steps << "\n";
  out << "# sigma " << fmt(p.sigma) << "\n";
  out << "# grid_step " << fmt(r.grid.step) << "\n";
  out << "size";
  for (int k : p.ks) out << ",same_k" << k;
  for (int k : p.ks) out << ",step_k" << k;
  for (const auto& [pair, curve] : r.cross)
    out << ",cross_k" << pair.first << "_k" << pair.second;
  out << "\n";
  for (std::size_t i = 0; i < r.sizes.size(); ++i) {
    out << r.sizes[i];
    for (const auto& curve : r.same_k) out << "," << fmt(curve[i]);
    for (const auto& curve : r.step_k) out << "," << fmt(curve[i]);
    for (const auto& [pair, curve] : r.cross) out << "," << fmt(curve[i]);
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// Rate experiment: distances between closely related graphs per size, with a
// log-log least-squares slope. Pairs:
//   complete + next-size   D(K_n, K_{n+1})
//   er + delete-edge       D(G, G minus one uniformly random edge), averaged
//                          over trials
//   cube + next-size       D(Q_{d-1}, Q_d) from the exact spectra, with the
//                          erf upper bound attached (sizes are dimensions)

struct RateParams {
  std::string family = "complete";
  std::string pair = "next-size";
  std::vector<int> sizes;
  int trials = 1;
  double avg_degree = 4.0;
  std::uint64_t seed = 1;
  double sigma = 0.05;
  double grid_step = 0.0;
  int eigensolver_cap = kDefaultSpectrumCap;
};

struct RatePoint {
  double n = 0.0;
  double distance = 0.0;
  double bound = std::numeric_limits<double>::quiet_NaN();
};

struct RateResult {
  RateParams params;
  GridSpec grid;
  std::vector<RatePoint> points;
  std::optional<RateFit> fit;
  std::string fit_note;  // set when the fit is skipped
};

inline RateResult run_rate_experiment(const RateParams& p) {
  if (p.sizes.empty()) throw std::invalid_argument("rate needs sizes");
  if (p.trials < 1) throw std::invalid_argument("rate needs trials >= 1");
  RateResult result;
  result.params = p;
  result.grid = GridSpec::for_sigma(p.sigma, p.grid_step);
  const Rng root(p.seed);

  result.points.resize(p.sizes.size());
  if (p.family == "complete" && p.pair == "next-size") {
    parallel_for(static_cast<int>(p.sizes.size()), [&](int i) {
      const int n = p.sizes[i];
      const Spectrum a = spectrum(make_complete(n), p.eigensolver_cap);
      const Spectrum b = spectrum(make_complete(n + 1), p.eigensolver_cap);
      result.points[i] = {static_cast<double>(n),
                          spectral_distance(a, b, p.sigma, result.grid),
                          std::numeric_limits<double>::quiet_NaN()};
    });
  } else if (p.family == "er" && p.pair == "delete-edge") {
    for (std::size_t i = 0; i < p.sizes.size(); ++i) {
      const int n = p.sizes[i];
      std::vector<double> trial_distance(p.trials);
      parallel_for(p.trials, [&](int t) {
        Rng stream = root.fork(131ULL * n + t);
        const Graph g = generate_er({n, p.avg_degree}, stream.next());
        if (g.edge_count() == 0)
          throw data_error("er draw has no edge to delete at n = " +
                           std::to_string(n));
        const auto& e = g.edges()[stream.next_below(g.edge_count())];
        const Graph edited =
            apply_edit(g, EditOp::delete_edge(e.first, e.second));
        trial_distance[t] = spectral_distance(
            spectrum(g, p.eigensolver_cap), spectrum(edited, p.eigensolver_cap),
            p.sigma, result.grid);
      });
      double mean = 0.0;
      for (double d : trial_distance) mean += d;
      result.points[i] = {static_cast<double>(n), mean / p.trials,
                          std::numeric_limits<double>::quiet_NaN()};
    }
  } else if (p.family == "cube" && p.pair == "next-size") {
    for (std::size_t i = 0; i < p.sizes.size(); ++i) {
      const int d = p.sizes[i];
      if (d < 2) throw std::invalid_argument("cube rate needs dimensions >= 2");
      const Spectrum a = closed_form_spectrum(Hypercube{d - 1});
      const Spectrum b = closed_form_spectrum(Hypercube{d});
      result.points[i] = {static_cast<double>(1 << d),
                          spectral_distance(a, b, p.sigma, result.grid),
                          hypercube_distance_bound(d, p.sigma)};
    }
  } else {
    throw std::invalid_argument("unsupported family/pair combination '" +
                                p.family + "/" + p.pair + "'");
  }

  std::vector<double> ns, ds;
  for (const auto& point : result.points) {
    ns.push_back(point.n);
    ds.push_back(point.distance);
  }
  result.fit = fit_log_log(ns, ds);
  if (!result.fit)
    result.fit_note = ns.size() < 4
                          ? "fit skipped: fewer than 4 sizes"
                          : "fit skipped: zero distance at some size";
  return result;
}

inline void write_rate_csv(const RateResult& r, std::ostream& out) {
  using experiment_detail::fmt;
  const auto& p = r.params;
  out << "# specgraph " << kVersion << "\n";
  out << "# experiment rate\n";
  out << "# family " << p.family << "\n";
  out << "# pair " << p.pair << "\n";
  out << "# trials " << p.trials << "\n";
  out << "# avg_degree " << fmt(p.avg_degree) << "\n";
  out << "# seed " << p.seed << "\n";
  out << "# sigma " << fmt(p.sigma) << "\n";
  out << "# grid_step " << fmt(r.grid.step) << "\n";
  if (r.fit)
    out << "# fit slope " << fmt(r.fit->slope) << " intercept "
        << fmt(r.fit->intercept) << " residual " << fmt(r.fit->residual)
        << "\n";
  else
    out << "# " << r.fit_note << "\n";
  const bool with_bound = p.family == "cube";
  out << (with_bound ? "n,distance,bound" : "n,distance") << "\n";
  for (const auto& point : r.points) {
    out << fmt(point.n) << "," << fmt(point.distance);
    if (with_bound) out << "," << fmt(point.bound);
    out << "\n";
  }
}

}  // namespace specgraph
