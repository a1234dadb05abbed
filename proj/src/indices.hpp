#pragma once

#include <span>
#include <string>
#include <vector>

#include "graph.hpp"

namespace fuzzytopo {

enum class IndexId { Sombor, SomborAlpha, ZagrebM1, ZagrebM2, Randic, Nirmala };

/// Which index to evaluate. `alpha` is the exponent of the general Sombor
/// index and is only meaningful for SomborAlpha; alpha = 1 reduces it to the
/// plain Sombor index, values below 1 are rejected.
struct IndexKind {
  IndexId id = IndexId::Sombor;
  double alpha = 1.0;

  static IndexKind sombor() { return {IndexId::Sombor, 1.0}; }
  static IndexKind sombor_alpha(double alpha) {
    return {IndexId::SomborAlpha, alpha};
  }
  static IndexKind zagreb_m1() { return {IndexId::ZagrebM1, 1.0}; }
  static IndexKind zagreb_m2() { return {IndexId::ZagrebM2, 1.0}; }
  static IndexKind randic() { return {IndexId::Randic, 1.0}; }
  static IndexKind nirmala() { return {IndexId::Nirmala, 1.0}; }
};

std::string index_name(const IndexKind& kind);
/// Accepts "so", "so_alpha", "m1", "m2", "randic", "nirmala".
IndexKind index_from_string(const std::string& name, double alpha);

/// Index value with optional per-term breakdown. Terms are per edge in
/// canonical edge order, except ZagrebM1 whose natural terms are per vertex.
struct IndexValue {
  IndexKind kind;
  double value = 0.0;
  std::vector<double> terms;
  bool per_vertex_terms = false;
};

double sombor(const FuzzyGraph& g);
double sombor_alpha(const FuzzyGraph& g, double alpha);
double zagreb_m1(const FuzzyGraph& g);
double zagreb_m2(const FuzzyGraph& g);
double randic(const FuzzyGraph& g);
double nirmala(const FuzzyGraph& g);

double index_value(const FuzzyGraph& g, const IndexKind& kind);
IndexValue index_value_with_terms(const FuzzyGraph& g, const IndexKind& kind);

/// Exact partial derivatives of sombor(g) with respect to each edge
/// membership, in canonical edge order. Covers both the direct term and the
/// coupling through the fuzzy degrees of every incident edge.
std::vector<double> sombor_gradient(const FuzzyGraph& g);

/// Same, for any of the six indices.
std::vector<double> index_gradient(const FuzzyGraph& g, const IndexKind& kind);

namespace detail {

// Span-level kernels shared with the membership optimizer, which evaluates
// many membership vectors over a fixed support without building FuzzyGraph
// values. `degrees` must have one entry per vertex id used by `edges`.

void fuzzy_degrees(std::span<const FuzzyEdge> edges, std::span<double> out);

double index_value_raw(std::span<const FuzzyEdge> edges,
                       std::span<const double> degrees, const IndexKind& kind);

void index_gradient_raw(std::span<const FuzzyEdge> edges,
                        std::span<const double> degrees, const IndexKind& kind,
                        std::span<double> out);

}  // namespace detail

}  // namespace fuzzytopo
