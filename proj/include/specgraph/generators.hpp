#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/rng.hpp"

namespace specgraph {

// Deterministic graph families. Each struct validates its own parameters in
// the corresponding generator.

struct Complete {
  int n;
};
struct CompleteBipartite {
  int n1;
  int n2;
};
struct Star {
  int n;
};
struct Path {
  int n;
};
struct Cycle {
  int n;
};
struct Hypercube {
  int d;
};
// m triangles sharing a single hub vertex; n = 2m + 1.
struct Petal {
  int m;
};
// Complete rooted tree: the root has k children, every other internal vertex
// k-1, so all internal degrees equal k. Exactly one of depth/size is set;
// size > 0 selects the breadth-first truncation with that many vertices.
struct KRegularTree {
  int k;
  int depth = -1;
  int size = -1;
};
// Even cycle C_{2m} with every other vertex duplicated (the twin copies both
// cycle edges of its original); n = 3m, |E| = 4m.
struct DuplicatedCycle {
  int m;
};

using FamilySpec =
    std::variant<Complete, CompleteBipartite, Star, Path, Cycle, Hypercube,
                 Petal, KRegularTree, DuplicatedCycle>;

// Seeded random models.
struct ErdosRenyi {
  int n;
  double avg_degree;  // edge probability p = avg_degree / (n - 1)
};
struct BarabasiAlbert {
  int n;
  int edges_per_step;
  int initial_complete_size;
};

using RandomSpec = std::variant<ErdosRenyi, BarabasiAlbert>;

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace detail

inline Graph make_complete(int n) {
  detail::require(n >= 1, "complete graph needs n >= 1");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, std::move(edges));
}

inline Graph make_complete_bipartite(int n1, int n2) {
  detail::require(n1 >= 1 && n2 >= 1, "complete bipartite needs n1, n2 >= 1");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n1) * n2);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  return Graph::build(n1 + n2, std::move(edges));
}

inline Graph make_star(int n) {
  detail::require(n >= 2, "star needs n >= 2");
  return make_complete_bipartite(1, n - 1);
}

inline Graph make_path(int n) {
  detail::require(n >= 1, "path needs n >= 1");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, std::move(edges));
}

inline Graph make_cycle(int n) {
  detail::require(n >= 3, "cycle needs n >= 3");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::build(n, std::move(edges));
}

inline Graph make_hypercube(int d) {
  detail::require(d >= 1 && d < 26, "hypercube dimension out of range");
  const int n = 1 << d;
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(d) << (d - 1));
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph::build(n, std::move(edges));
}

inline Graph make_petal(int m) {
  detail::require(m >= 1, "petal needs m >= 1");
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int a = 2 * i + 1, b = 2 * i + 2;
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    edges.emplace_back(a, b);
  }
  return Graph::build(2 * m + 1, std::move(edges));
}

inline Graph make_k_regular_tree(int k, int depth) {
  detail::require(k >= 3, "k-regular tree needs k >= 3");
  detail::require(depth >= 0, "k-regular tree needs depth >= 0");
  std::vector<Graph::Edge> edges;
  std::vector<int> level{0};
  int next_id = 1;
  for (int d = 1; d <= depth; ++d) {
    std::vector<int> next_level;
    for (int parent : level) {
      const int children = (parent == 0) ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        edges.emplace_back(parent, next_id);
        next_level.push_back(next_id++);
      }
    }
    level = std::move(next_level);
  }
  return Graph::build(next_id, std::move(edges));
}

// Breadth-first truncation of the complete k-regular tree: vertices are
// added in BFS order until the target size is reached, so trees of growing
// size form a nested family.
inline Graph make_k_regular_tree_by_size(int k, int size) {
  detail::require(k >= 3, "k-regular tree needs k >= 3");
  detail::require(size >= 1, "k-regular tree needs size >= 1");
  std::vector<Graph::Edge> edges;
  std::deque<std::pair<int, int>> frontier;  // vertex, remaining child slots
  frontier.emplace_back(0, k);
  int next_id = 1;
  while (next_id < size) {
    auto& [parent, slots] = frontier.front();
    edges.emplace_back(parent, next_id);
    frontier.emplace_back(next_id++, k - 1);
    if (--slots == 0) frontier.pop_front();
  }
  return Graph::build(size, std::move(edges));
}

inline Graph make_duplicated_cycle(int m) {
  detail::require(m >= 2, "duplicated cycle needs m >= 2");
  const int cycle_n = 2 * m;
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < cycle_n; ++v) edges.emplace_back(v, (v + 1) % cycle_n);
  for (int i = 0; i < m; ++i) {
    const int original = 2 * i;
    const int twin = cycle_n + i;
    edges.emplace_back(twin, (original + cycle_n - 1) % cycle_n);
    edges.emplace_back(twin, (original + 1) % cycle_n);
  }
  return Graph::build(3 * m, std::move(edges));
}

inline Graph generate_family(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Complete>) return make_complete(s.n);
        if constexpr (std::is_same_v<T, CompleteBipartite>)
          return make_complete_bipartite(s.n1, s.n2);
        if constexpr (std::is_same_v<T, Star>) return make_star(s.n);
        if constexpr (std::is_same_v<T, Path>) return make_path(s.n);
        if constexpr (std::is_same_v<T, Cycle>) return make_cycle(s.n);
        if constexpr (std::is_same_v<T, Hypercube>) return make_hypercube(s.d);
        if constexpr (std::is_same_v<T, Petal>) return make_petal(s.m);
        if constexpr (std::is_same_v<T, KRegularTree>) {
          detail::require((s.depth >= 0) != (s.size >= 1),
                          "k-regular tree takes exactly one of depth/size");
          return s.depth >= 0 ? make_k_regular_tree(s.k, s.depth)
                              : make_k_regular_tree_by_size(s.k, s.size);
        }
        if constexpr (std::is_same_v<T, DuplicatedCycle>)
          return make_duplicated_cycle(s.m);
      },
      spec);
}

/// G(n, p) with p = avg_degree/(n-1): each of the C(n,2) possible edges is
/// included independently, drawing one uniform per pair in the order
/// (0,1), (0,2), ..., (n-2,n-1). Same seed, same graph.
inline Graph generate_er(const ErdosRenyi& spec, std::uint64_t seed) {
  detail::require(spec.n >= 1, "er needs n >= 1");
  detail::require(spec.avg_degree >= 0, "er needs avg_degree >= 0");
  detail::require(spec.n == 1 ? spec.avg_degree == 0
                              : spec.avg_degree <= spec.n - 1,
                  "er avg_degree exceeds n - 1");
  const double p = spec.n > 1 ? spec.avg_degree / (spec.n - 1) : 0.0;
  Rng rng(seed);
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < spec.n; ++u)
    for (int v = u + 1; v < spec.n; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return Graph::build(spec.n, std::move(edges));
}

namespace detail {

// Preferential-attachment step shared by generate_ba and grow: the chosen
// targets are distinct, drawn degree-proportionally from the weights frozen
// at the start of the step (repeat until distinct). With an all-isolated
// graph the draw falls back to uniform.
inline void attach_preferentially(std::vector<Graph::Edge>& edges,
                                  std::vector<int>& repeated, int existing,
                                  int new_vertex, int m, Rng& rng) {
  std::vector<int> targets;
  const std::size_t frozen = repeated.size();
  while (static_cast<int>(targets.size()) < m) {
    int candidate;
    if (frozen == 0)
      candidate = static_cast<int>(rng.next_below(existing));
    else
      candidate = repeated[rng.next_below(frozen)];
    if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
      targets.push_back(candidate);
  }
  for (int t : targets) {
    edges.emplace_back(t, new_vertex);
    repeated.push_back(t);
    repeated.push_back(new_vertex);
  }
}

}  // namespace detail

/// Preferential attachment from a complete seed graph: each new vertex
/// attaches edges_per_step distinct edges, targets drawn with probability
/// proportional to degree at the start of its step.
inline Graph generate_ba(const BarabasiAlbert& spec, std::uint64_t seed) {
  detail::require(spec.edges_per_step >= 1, "ba needs m >= 1");
  detail::require(spec.initial_complete_size >= spec.edges_per_step,
                  "ba needs init >= m");
  detail::require(spec.n >= spec.initial_complete_size, "ba needs n >= init");
  const int init = spec.initial_complete_size;
  std::vector<Graph::Edge> edges;
  std::vector<int> repeated;
  for (int u = 0; u < init; ++u)
    for (int v = u + 1; v < init; ++v) {
      edges.emplace_back(u, v);
      repeated.push_back(u);
      repeated.push_back(v);
    }
  Rng rng(seed);
  for (int v = init; v < spec.n; ++v)
    detail::attach_preferentially(edges, repeated, v, v, spec.edges_per_step,
                                  rng);
  return Graph::build(spec.n, std::move(edges));
}

struct PreferentialAttachment {
  int edges_per_step;
};
struct LeafAttachment {};

using GrowthRule = std::variant<PreferentialAttachment, LeafAttachment>;

/// Extends g to target_n vertices; the result contains g as the induced
/// subgraph on the first g.vertex_count() vertices.
inline Graph grow(const Graph& g, int target_n, const GrowthRule& rule,
                  std::uint64_t seed) {
  detail::require(target_n >= g.vertex_count(),
                  "grow target smaller than the graph");
  if (target_n == g.vertex_count()) return g;
  std::vector<Graph::Edge> edges = g.edges();
  Rng rng(seed);
  if (std::holds_alternative<PreferentialAttachment>(rule)) {
    const int m = std::get<PreferentialAttachment>(rule).edges_per_step;
    detail::require(m >= 1 && m <= g.vertex_count(),
                    "attachment count out of range");
    std::vector<int> repeated;
    repeated.reserve(2 * edges.size());
    for (const auto& [u, v] : edges) {
      repeated.push_back(u);
      repeated.push_back(v);
    }
    for (int v = g.vertex_count(); v < target_n; ++v)
      detail::attach_preferentially(edges, repeated, v, v, m, rng);
  } else {
    detail::require(g.vertex_count() >= 1, "leaf attachment needs a vertex");
    for (int v = g.vertex_count(); v < target_n; ++v)
      edges.emplace_back(static_cast<int>(rng.next_below(v)), v);
  }
  return Graph::build(target_n, std::move(edges));
}

inline Graph generate_random(const RandomSpec& spec, std::uint64_t seed) {
  if (const auto* er = std::get_if<ErdosRenyi>(&spec))
    return generate_er(*er, seed);
  return generate_ba(std::get<BarabasiAlbert>(spec), seed);
}

// Vertex count of the full k-regular tree of the given depth.
inline long long k_regular_tree_size(int k, int depth) {
  detail::require(k >= 3 && depth >= 0, "invalid k-regular tree parameters");
  long long total = 1, level = k;
  for (int d = 1; d <= depth; ++d) {
    total += level;
    level *= k - 1;
  }
  return total;
}

}  // namespace specgraph
