#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "specgraph/errors.hpp"
#include "specgraph/graph.hpp"

namespace specgraph {

// Edge-list text format:
//   # comment
//   n <vertex count>
//   u v
// One edge per line, whitespace-separated, 0-based endpoints < n.

namespace detail {

inline bool blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

inline bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stoll(token, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == token.size();
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  long line_no = 0;
  long long n = -1;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (fields >> extra)
      throw parse_error("line " + std::to_string(line_no) +
                            ": expected two fields, got more",
                        line_no);
    if (n < 0) {
      long long count = 0;
      if (a != "n" || !detail::parse_int(b, count) || count < 0)
        throw parse_error(
            "line " + std::to_string(line_no) + ": expected header 'n <count>'",
            line_no);
      n = count;
      continue;
    }
    long long u = 0, v = 0;
    if (!detail::parse_int(a, u) || !detail::parse_int(b, v))
      throw parse_error("line " + std::to_string(line_no) +
                            ": expected two integer endpoints, got '" + a +
                            " " + b + "'",
                        line_no);
    if (u == v)
      throw parse_error(
          "line " + std::to_string(line_no) + ": self-loop " + a + " " + b,
          line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("line " + std::to_string(line_no) +
                            ": endpoint out of range for n = " +
                            std::to_string(n),
                        line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw parse_error("missing header 'n <count>'", line_no);
  return Graph::build(static_cast<int>(n), std::move(edges));
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

/// A graph read from a file whose vertices carried arbitrary string labels.
/// Labels are assigned dense indices in order of first appearance; the map
/// is returned so callers can persist it next to derived outputs.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

inline LabeledGraph read_labeled_edge_list(std::istream& in) {
  std::string line;
  long line_no = 0;
  std::unordered_map<std::string, int> index;
  std::vector<std::string> labels;
  std::vector<Graph::Edge> edges;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty())
      throw parse_error(
          "line " + std::to_string(line_no) + ": expected two labels",
          line_no);
    if (fields >> extra)
      throw parse_error("line " + std::to_string(line_no) +
                            ": expected two fields, got more",
                        line_no);
    if (a == b)
      throw parse_error(
          "line " + std::to_string(line_no) + ": self-loop on '" + a + "'",
          line_no);
    const int u = intern(a);
    const int v = intern(b);
    edges.emplace_back(u, v);
  }
  Graph g = Graph::build(static_cast<int>(labels.size()), std::move(edges));
  return {std::move(g), std::move(labels)};
}

inline void write_label_map(const std::vector<std::string>& labels,
                            std::ostream& out) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << i << "\t" << labels[i] << "\n";
}

/// Reads either format: files starting with an "n <count>" header are
/// canonical index-based edge lists; anything else is treated as a labeled
/// edge list and relabeled to dense indices.
inline LabeledGraph read_graph_auto(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  bool canonical = false;
  std::istringstream scan(text);
  std::string line;
  while (std::getline(scan, line)) {
    if (detail::blank_or_comment(line)) continue;
    std::istringstream fields(line);
    std::string a, b;
    fields >> a >> b;
    long long count = 0;
    canonical = (a == "n" && detail::parse_int(b, count));
    break;
  }

  std::istringstream replay(text);
  if (canonical) return {read_edge_list(replay), {}};
  return read_labeled_edge_list(replay);
}

}  // namespace specgraph
