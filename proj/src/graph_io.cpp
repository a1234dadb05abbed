#include "graph_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "numformat.hpp"

namespace fuzzytopo {

namespace {

struct Token {
  std::string text;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_int(const std::string& tok, int line, const char* what) {
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return v;
}

double parse_real(const std::string& tok, int line, const char* what) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  return v;
}

}  // namespace

FuzzyGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  bool have_n = false;
  int n = 0;
  FuzzyGraph g;
  std::vector<char> vertex_seen;
  struct PendingEdge {
    int u, v, line;
  };
  std::vector<PendingEdge> edge_lines;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const std::string& directive = toks[0];

    if (directive == "n") {
      if (have_n) throw ParseError(line_no, "duplicate 'n' directive");
      if (toks.size() != 2) throw ParseError(line_no, "expected: n <count>");
      long count = parse_int(toks[1], line_no, "vertex count");
      if (count < 0) throw ParseError(line_no, "negative vertex count");
      n = static_cast<int>(count);
      g = FuzzyGraph(n);
      vertex_seen.assign(static_cast<std::size_t>(n), 0);
      have_n = true;
      continue;
    }
    if (!have_n) {
      throw ParseError(line_no, "'n <count>' must come first");
    }
    if (directive == "v") {
      if (toks.size() != 3) throw ParseError(line_no, "expected: v <id> <nu>");
      long id = parse_int(toks[1], line_no, "vertex id");
      double nu = parse_real(toks[2], line_no, "vertex membership");
      if (id < 0 || id >= n) {
        throw ParseError(line_no, "vertex id " + std::to_string(id) +
                                      " outside [0, " + std::to_string(n) + ")");
      }
      if (vertex_seen[static_cast<std::size_t>(id)]) {
        throw ParseError(line_no,
                         "duplicate vertex line for id " + std::to_string(id));
      }
      vertex_seen[static_cast<std::size_t>(id)] = 1;
      if (!(nu >= 0.0 && nu <= 1.0)) {
        throw ParseError(line_no, "vertex membership out of [0,1]");
      }
      g.set_vertex_membership(static_cast<int>(id), nu);
      continue;
    }
    if (directive == "e") {
      if (toks.size() != 4) {
        throw ParseError(line_no, "expected: e <u> <v> <mu>");
      }
      long u = parse_int(toks[1], line_no, "vertex id");
      long v = parse_int(toks[2], line_no, "vertex id");
      double mu = parse_real(toks[3], line_no, "edge membership");
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParseError(line_no, "edge endpoint outside [0, " +
                                      std::to_string(n) + ")");
      }
      if (u == v) {
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      }
      if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
        throw ParseError(line_no, "duplicate edge (" + std::to_string(u) +
                                      "," + std::to_string(v) + ")");
      }
      if (!(mu > 0.0 && mu <= 1.0)) {
        throw ParseError(line_no, "membership out of (0,1]");
      }
      g.add_edge(static_cast<int>(u), static_cast<int>(v), mu);
      edge_lines.push_back({static_cast<int>(u), static_cast<int>(v), line_no});
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + directive + "'");
  }
  if (!have_n) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n' line");

  // Axiom check last so 'v' lines may follow their edges.
  for (const auto& pe : edge_lines) {
    double mu = g.edge_membership(pe.u, pe.v);
    double cap =
        std::min(g.vertex_membership(pe.u), g.vertex_membership(pe.v));
    if (mu > cap) {
      throw ParseError(pe.line, "edge (" + std::to_string(pe.u) + "," +
                                    std::to_string(pe.v) + "): membership " +
                                    format_shortest(mu) + " > min(nu) = " +
                                    format_shortest(cap));
    }
  }
  return g;
}

FuzzyGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const FuzzyGraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "v " + std::to_string(v) + " " +
           format_shortest(g.vertex_membership(v)) + "\n";
  }
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           format_shortest(e.mu) + "\n";
  }
  return out;
}

void write_graph_file(const FuzzyGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << format_graph(g);
}

}  // namespace fuzzytopo
