#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specgraph {

/// Simple undirected graph: no self-loops, no parallel edges, vertices are
/// dense 0-based indices. Values are immutable after construction; edit
/// operations return new graphs.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  static Graph build(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
      if (u == v)
        throw std::invalid_argument("self-loop rejected: (" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) + ")");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("endpoint out of range: (" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) + ") with n = " +
                                    std::to_string(n));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  int degree(int v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    offsets_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
    adj_.resize(2 * edges_.size());
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
      adj_[cursor[u]++] = v;
      adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
      std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range, n = " + std::to_string(n_));
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adj_;
};

inline double average_degree(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("average degree of an empty graph");
  return 2.0 * g.edge_count() / g.vertex_count();
}

struct Components {
  int count = 0;
  std::vector<int> label;  // per-vertex component index, 0-based
};

inline Components connected_components(const Graph& g) {
  const int n = g.vertex_count();
  Components out;
  out.label.assign(n, -1);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (out.label[start] >= 0) continue;
    const int comp = out.count++;
    out.label[start] = comp;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (out.label[w] < 0) {
          out.label[w] = comp;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

/// One atomic edit: insert/delete an edge, or insert/delete an isolated
/// vertex. Deleting vertex v moves the previous last vertex into slot v.
struct EditOp {
  enum class Kind {
    insert_edge,
    delete_edge,
    insert_isolated_vertex,
    delete_isolated_vertex,
  };

  Kind kind;
  int u = -1;
  int v = -1;

  static EditOp insert_edge(int u, int v) { return {Kind::insert_edge, u, v}; }
  static EditOp delete_edge(int u, int v) { return {Kind::delete_edge, u, v}; }
  static EditOp insert_isolated_vertex() {
    return {Kind::insert_isolated_vertex};
  }
  static EditOp delete_isolated_vertex(int v) {
    return {Kind::delete_isolated_vertex, -1, v};
  }
};

inline Graph apply_edit(const Graph& g, const EditOp& op) {
  const int n = g.vertex_count();
  std::vector<Graph::Edge> edges = g.edges();
  switch (op.kind) {
    case EditOp::Kind::insert_edge: {
      if (g.has_edge(op.u, op.v))
        throw std::invalid_argument("edge already present: (" +
                                    std::to_string(op.u) + "," +
                                    std::to_string(op.v) + ")");
      edges.emplace_back(op.u, op.v);
      return Graph::build(n, std::move(edges));
    }
    case EditOp::Kind::delete_edge: {
      if (!g.has_edge(op.u, op.v))
        throw std::invalid_argument("no such edge: (" + std::to_string(op.u) +
                                    "," + std::to_string(op.v) + ")");
      const Graph::Edge e{std::min(op.u, op.v), std::max(op.u, op.v)};
      edges.erase(std::find(edges.begin(), edges.end(), e));
      return Graph::build(n, std::move(edges));
    }
    case EditOp::Kind::insert_isolated_vertex:
      return Graph::build(n + 1, std::move(edges));
    case EditOp::Kind::delete_isolated_vertex: {
      if (g.degree(op.v) != 0)
        throw std::invalid_argument("vertex " + std::to_string(op.v) +
                                    " is not isolated");
      const int last = n - 1;
      for (auto& [a, b] : edges) {
        if (a == last) a = op.v;
        if (b == last) b = op.v;
      }
      return Graph::build(n - 1, std::move(edges));
    }
  }
  throw std::logic_error("unreachable");
}

/// Relabels vertices: new vertex perm[v] takes the role of old vertex v.
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Graph::Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::build(g.vertex_count(), std::move(edges));
}

}  // namespace specgraph
