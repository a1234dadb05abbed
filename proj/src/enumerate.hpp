#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fuzzytopo {

/// Crisp support produced by the enumerators: one representative per
/// isomorphism class, edges sorted (u < v), ids stable across runs.
struct Support {
  int n = 0;
  std::string id;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Canonical level sequences (root at level 1) of all non-isomorphic rooted
/// trees on n vertices, in the generation order of the Beyer-Hedetniemi
/// successor rule (lexicographically decreasing).
std::vector<std::vector<int>> rooted_tree_level_sequences(int n);

/// One representative per isomorphism class of free trees, 1 <= n <= 12.
/// Selected from the rooted enumeration by centroid-canonical rooting, so no
/// pairwise isomorphism tests are involved.
std::vector<Support> enumerate_trees(int n);

/// Connected graphs with exactly one cycle (n vertices, n edges), 3 <= n <= 9.
/// Built structurally as a cycle of length k with rooted trees attached,
/// deduplicated under the dihedral symmetry of the cycle.
std::vector<Support> enumerate_unicyclic(int n);

/// All connected graphs on n vertices, 1 <= n <= 7. Brute force over edge
/// masks keeping only the lexicographically minimal mask within each
/// isomorphism class (minimum taken over degree-sorted vertex orders).
std::vector<Support> enumerate_connected(int n);

/// All graphs (connected or not) on n vertices with exactly k edges,
/// 1 <= n <= 6. Same canonical-mask scheme as enumerate_connected.
std::vector<Support> enumerate_with_edge_count(int n, int k);

}  // namespace fuzzytopo
