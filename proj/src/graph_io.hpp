#pragma once

#include <stdexcept>
#include <string>

#include "graph.hpp"

namespace fuzzytopo {

/// Parse failure in the graph text format; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the line-oriented graph format:
///
///   n <vertex-count>
///   v <id> <nu>        (optional; missing vertices default nu = 1)
///   e <u> <v> <mu>     (0 < mu <= 1)
///
/// '#' starts a comment, blank lines are skipped. Parsing is strict: unknown
/// directives, duplicate edges or vertex lines, out-of-range ids, memberships
/// outside their ranges and axiom violations are errors with line numbers.
FuzzyGraph parse_graph(const std::string& text);

/// parse_graph over a file; throws std::runtime_error when unreadable.
FuzzyGraph parse_graph_file(const std::string& path);

/// Serializes in the same format; parse_graph(format_graph(g)) reproduces g
/// exactly (memberships are written with round-trip precision).
std::string format_graph(const FuzzyGraph& g);

void write_graph_file(const FuzzyGraph& g, const std::string& path);

}  // namespace fuzzytopo
