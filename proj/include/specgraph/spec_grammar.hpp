#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include "specgraph/errors.hpp"
#include "specgraph/generators.hpp"

namespace specgraph {

// Textual graph specs: "<family>:<key>=<value>{,<key>=<value>}", e.g.
// "complete:n=4", "tree:k=4,depth=6", "ba:n=1000,m=2,init=5",
// "er:n=1000,d=4". Unknown families and keys are rejected with the
// character position of the offending token.

using GraphSpec = std::variant<FamilySpec, RandomSpec>;

namespace grammar_detail {

struct KeyValue {
  std::string value;
  long position;
  bool used = false;
};

class SpecFields {
 public:
  SpecFields(const std::string& text, std::string family, long fields_start)
      : text_(text), family_(std::move(family)) {
    long pos = fields_start;
    std::string rest = text.substr(fields_start);
    std::istringstream stream(rest);
    std::string item;
    while (std::getline(stream, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 > item.size())
        throw parse_error("expected key=value at position " +
                              std::to_string(pos) + " in '" + text + "'",
                          pos);
      const std::string key = item.substr(0, eq);
      if (fields_.count(key))
        throw parse_error("duplicate key '" + key + "' at position " +
                              std::to_string(pos) + " in '" + text + "'",
                          pos);
      fields_[key] = {item.substr(eq + 1), pos};
      pos += static_cast<long>(item.size()) + 1;
    }
  }

  bool has(const std::string& key) const { return fields_.count(key) != 0; }

  long long get_int(const std::string& key) {
    auto& field = require(key);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(field.value, &used);
      if (used != field.value.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw parse_error("key '" + key + "': expected an integer, got '" +
                            field.value + "' at position " +
                            std::to_string(field.position),
                        field.position);
    }
  }

  double get_real(const std::string& key) {
    auto& field = require(key);
    try {
      std::size_t used = 0;
      const double v = std::stod(field.value, &used);
      if (used != field.value.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw parse_error("key '" + key + "': expected a number, got '" +
                            field.value + "' at position " +
                            std::to_string(field.position),
                        field.position);
    }
  }

  void finish() const {
    for (const auto& [key, field] : fields_)
      if (!field.used)
        throw parse_error("unknown key '" + key + "' for family '" + family_ +
                              "' at position " + std::to_string(field.position),
                          field.position);
  }

 private:
  KeyValue& require(const std::string& key) {
    auto it = fields_.find(key);
    if (it == fields_.end())
      throw parse_error("family '" + family_ + "' needs key '" + key +
                            "' in '" + text_ + "'",
                        0);
    it->second.used = true;
    return it->second;
  }

  std::string text_;
  std::string family_;
  std::map<std::string, KeyValue> fields_;
};

inline int narrow(long long v, const std::string& what) {
  if (v < -(1LL << 30) || v > (1LL << 30))
    throw parse_error(what + " out of range", 0);
  return static_cast<int>(v);
}

}  // namespace grammar_detail

inline GraphSpec parse_graph_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0)
    throw parse_error("expected '<family>:<key>=<value>,...' in '" + text + "'",
                      0);
  const std::string family = text.substr(0, colon);
  grammar_detail::SpecFields fields(text, family,
                                    static_cast<long>(colon) + 1);
  using grammar_detail::narrow;

  GraphSpec spec;
  if (family == "complete") {
    spec = FamilySpec{Complete{narrow(fields.get_int("n"), "n")}};
  } else if (family == "bipartite") {
    spec = FamilySpec{CompleteBipartite{narrow(fields.get_int("n1"), "n1"),
                                        narrow(fields.get_int("n2"), "n2")}};
  } else if (family == "star") {
    spec = FamilySpec{Star{narrow(fields.get_int("n"), "n")}};
  } else if (family == "path") {
    spec = FamilySpec{Path{narrow(fields.get_int("n"), "n")}};
  } else if (family == "cycle") {
    spec = FamilySpec{Cycle{narrow(fields.get_int("n"), "n")}};
  } else if (family == "cube") {
    spec = FamilySpec{Hypercube{narrow(fields.get_int("d"), "d")}};
  } else if (family == "petal") {
    spec = FamilySpec{Petal{narrow(fields.get_int("m"), "m")}};
  } else if (family == "tree") {
    KRegularTree tree{narrow(fields.get_int("k"), "k")};
    const bool has_depth = fields.has("depth");
    const bool has_size = fields.has("size");
    if (has_depth == has_size)
      throw parse_error(
          "family 'tree' takes exactly one of 'depth' or 'size' in '" + text +
              "'",
          0);
    if (has_depth) tree.depth = narrow(fields.get_int("depth"), "depth");
    if (has_size) tree.size = narrow(fields.get_int("size"), "size");
    spec = FamilySpec{tree};
  } else if (family == "dupcycle") {
    spec = FamilySpec{DuplicatedCycle{narrow(fields.get_int("m"), "m")}};
  } else if (family == "er") {
    spec = RandomSpec{
        ErdosRenyi{narrow(fields.get_int("n"), "n"), fields.get_real("d")}};
  } else if (family == "ba") {
    spec = RandomSpec{BarabasiAlbert{narrow(fields.get_int("n"), "n"),
                                     narrow(fields.get_int("m"), "m"),
                                     narrow(fields.get_int("init"), "init")}};
  } else {
    throw parse_error("unknown family '" + family + "' at position 0", 0);
  }
  fields.finish();
  return spec;
}

inline std::string spec_to_string(const GraphSpec& spec) {
  std::ostringstream out;
  if (const auto* fam = std::get_if<FamilySpec>(&spec)) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Complete>)
            out << "complete:n=" << s.n;
          else if constexpr (std::is_same_v<T, CompleteBipartite>)
            out << "bipartite:n1=" << s.n1 << ",n2=" << s.n2;
          else if constexpr (std::is_same_v<T, Star>)
            out << "star:n=" << s.n;
          else if constexpr (std::is_same_v<T, Path>)
            out << "path:n=" << s.n;
          else if constexpr (std::is_same_v<T, Cycle>)
            out << "cycle:n=" << s.n;
          else if constexpr (std::is_same_v<T, Hypercube>)
            out << "cube:d=" << s.d;
          else if constexpr (std::is_same_v<T, Petal>)
            out << "petal:m=" << s.m;
          else if constexpr (std::is_same_v<T, KRegularTree>) {
            out << "tree:k=" << s.k;
            if (s.depth >= 0)
              out << ",depth=" << s.depth;
            else
              out << ",size=" << s.size;
          } else if constexpr (std::is_same_v<T, DuplicatedCycle>)
            out << "dupcycle:m=" << s.m;
        },
        *fam);
  } else {
    const auto& random = std::get<RandomSpec>(spec);
    if (const auto* er = std::get_if<ErdosRenyi>(&random))
      out << "er:n=" << er->n << ",d=" << er->avg_degree;
    else {
      const auto& ba = std::get<BarabasiAlbert>(random);
      out << "ba:n=" << ba.n << ",m=" << ba.edges_per_step
          << ",init=" << ba.initial_complete_size;
    }
  }
  return out.str();
}

/// Builds the graph a parsed spec describes; the seed is used only by the
/// random models.
inline Graph generate(const GraphSpec& spec, std::uint64_t seed) {
  if (const auto* fam = std::get_if<FamilySpec>(&spec))
    return generate_family(*fam);
  return generate_random(std::get<RandomSpec>(spec), seed);
}

}  // namespace specgraph
