#pragma once

// Independent oracles used by the unit and acceptance suites. Everything here
// recomputes results from first principles rather than calling the code paths
// under test: a different canonical form for isomorphism, integer degrees for
// the crisp Sombor value, and numeric differentiation for gradients.

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "indices.hpp"

namespace fuzzytopo::oracle {

// Classical Sombor index of the support, from integer degrees.
double classical_sombor_crisp(const FuzzyGraph& g);

// Central finite differences of an index with respect to edge memberships.
std::vector<double> finite_difference_gradient(const FuzzyGraph& g,
                                               const IndexKind& kind, double h);

// Number of non-isomorphic free trees on n vertices (n <= 10), by decoding
// every labeled tree from its Pruefer sequence and deduplicating with a
// centroid-rooted canonical code. Parallel over sequence prefixes.
long count_free_trees_prufer(int n);

// Non-isomorphic unicyclic graphs on n vertices (n <= 6): all labeled n-edge
// connected graphs, deduplicated by the minimum adjacency mask over all n!
// vertex permutations.
long count_unicyclic_brute(int n);

// Same brute force, counting all connected graphs on n vertices (n <= 6).
long count_connected_brute(int n);

}  // namespace fuzzytopo::oracle
