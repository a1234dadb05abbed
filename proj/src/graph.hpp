#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fuzzytopo {

/// One undirected edge with its membership value. Endpoints are normalized to
/// u <= v on insertion; a positive mu means the edge exists (mu = 0 is encoded
/// by absence).
struct FuzzyEdge {
  int u = 0;
  int v = 0;
  double mu = 0.0;
};

/// Undirected simple fuzzy graph: vertex memberships nu in [0,1] and edge
/// memberships mu in (0,1] subject to mu(uv) <= min(nu(u), nu(v)).
///
/// Construction is permissive (out-of-range memberships, self-loops and
/// duplicate pairs are storable) so that validate() has something to report;
/// everything downstream assumes a graph that validates cleanly. Values are
/// intended to be immutable once built and are safe to share across threads.
class FuzzyGraph {
 public:
  FuzzyGraph() = default;
  explicit FuzzyGraph(int n) : nu_(static_cast<std::size_t>(n), 1.0) {}

  /// Assembles a graph from raw parts without any checking beyond vertex-id
  /// bounds. Edges are pair-normalized and sorted.
  static FuzzyGraph from_parts(std::vector<double> vertex_memberships,
                               std::vector<FuzzyEdge> edges);

  int order() const { return static_cast<int>(nu_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Edges in canonical order: sorted by (u, v) with u <= v.
  const std::vector<FuzzyEdge>& edges() const { return edges_; }

  double vertex_membership(int v) const;
  void set_vertex_membership(int v, double nu);

  /// Inserts an edge keeping canonical order. Ids must be in range; the
  /// membership value and the simple-graph rules are left to validate().
  void add_edge(int u, int v, double mu);

  bool has_edge(int u, int v) const;
  /// Membership of (u,v), or 0 when the pair is not an edge.
  double edge_membership(int u, int v) const;

 private:
  void check_vertex(int v, const char* what) const;

  std::vector<double> nu_;
  std::vector<FuzzyEdge> edges_;
};

/// Violation found by validate(). `u`/`v` locate the offending vertex or edge.
struct Violation {
  enum class Rule {
    SelfLoop,
    DuplicateEdge,
    VertexMembershipRange,  // nu outside [0,1]
    EdgeMembershipRange,    // mu outside (0,1]
    AxiomExceeded,          // mu > min(nu_u, nu_v)
  };
  Rule rule;
  int u = -1;
  int v = -1;
  std::string message;
};

/// Checks every type invariant; returns the empty vector iff the graph is a
/// valid fuzzy graph. Violations are data, not errors.
std::vector<Violation> validate(const FuzzyGraph& g);

/// Throws std::invalid_argument listing all violations, if any.
void validate_or_throw(const FuzzyGraph& g);

/// Fuzzy degrees and the derived extremes of a graph.
struct DegreeProfile {
  std::vector<double> degrees;   // fuzzy degree per vertex
  double size = 0.0;             // fuzzy size: sum of edge memberships
  double delta_min = 0.0;        // minimum fuzzy degree over vertices
  double delta_max = 0.0;        // maximum fuzzy degree over vertices
  double edge_degree_max = 0.0;  // max over edges of deg(u) + deg(v)
};

DegreeProfile degree_profile(const FuzzyGraph& g);

/// Sum of all edge memberships.
double fuzzy_size(const FuzzyGraph& g);

/// Multiplies every edge membership by t in (0,1]; vertex memberships are
/// unchanged, so the result of scaling a valid graph is valid.
FuzzyGraph scale_memberships(const FuzzyGraph& g, double t);

/// Same support with every membership set to 1.
FuzzyGraph crisp_support(const FuzzyGraph& g);

/// Deterministic G(n, p)-style fuzzy graph. Draw order is fixed: first nu for
/// vertices 0..n-1 uniform on [0.5, 1], then pairs (u,v) in lexicographic
/// order, each present with probability edge_probability and, when present,
/// mu uniform on (0, min(nu_u, nu_v)]. The result always validates.
FuzzyGraph random_fuzzy_graph(int n, double edge_probability,
                              std::uint64_t seed);

/// Applies a vertex permutation: vertex i becomes perm[i].
FuzzyGraph relabel(const FuzzyGraph& g, std::span<const int> perm);

/// Connectivity of the support (true for n <= 1).
bool is_connected(const FuzzyGraph& g);

/// Support is a tree: connected with exactly n-1 edges.
bool is_tree_support(const FuzzyGraph& g);

/// Support is unicyclic: connected with exactly n edges.
bool is_unicyclic_support(const FuzzyGraph& g);

/// Support is complete: all n(n-1)/2 pairs present.
bool is_complete_support(const FuzzyGraph& g);

/// Vertices left after repeatedly deleting degree-<=1 vertices of the
/// support; for a unicyclic graph this is exactly its cycle.
std::vector<int> two_core(const FuzzyGraph& g);

}  // namespace fuzzytopo
