#pragma once

#include <stdexcept>
#include <string>

namespace specgraph {

// Malformed input text (edge-list files, spec strings). Carries a 1-based
// line number for files, or a 0-based character offset for one-line specs.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long where)
      : std::runtime_error(what), where_(where) {}
  long where() const { return where_; }

 private:
  long where_;
};

// Input that parsed but cannot be processed (unreadable file, graph larger
// than the eigensolver cap, mismatched density grids).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure, e.g. the eigensolver hit its iteration cap.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace specgraph
