#include "graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

#include "numformat.hpp"
#include "util.hpp"

namespace fuzzytopo {

namespace {

bool edge_less(const FuzzyEdge& a, const FuzzyEdge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

}  // namespace

FuzzyGraph FuzzyGraph::from_parts(std::vector<double> vertex_memberships,
                                  std::vector<FuzzyEdge> edges) {
  FuzzyGraph g;
  g.nu_ = std::move(vertex_memberships);
  g.edges_ = std::move(edges);
  for (auto& e : g.edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    g.check_vertex(e.u, "edge endpoint");
    g.check_vertex(e.v, "edge endpoint");
  }
  std::stable_sort(g.edges_.begin(), g.edges_.end(), edge_less);
  return g;
}

void FuzzyGraph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range(std::string(what) + " id " + std::to_string(v) +
                            " outside [0, " + std::to_string(order()) + ")");
  }
}

double FuzzyGraph::vertex_membership(int v) const {
  check_vertex(v, "vertex");
  return nu_[static_cast<std::size_t>(v)];
}

void FuzzyGraph::set_vertex_membership(int v, double nu) {
  check_vertex(v, "vertex");
  nu_[static_cast<std::size_t>(v)] = nu;
}

void FuzzyGraph::add_edge(int u, int v, double mu) {
  check_vertex(u, "edge endpoint");
  check_vertex(v, "edge endpoint");
  if (u > v) std::swap(u, v);
  FuzzyEdge e{u, v, mu};
  auto it = std::upper_bound(edges_.begin(), edges_.end(), e, edge_less);
  edges_.insert(it, e);
}

bool FuzzyGraph::has_edge(int u, int v) const {
  return edge_membership(u, v) > 0.0;
}

double FuzzyGraph::edge_membership(int u, int v) const {
  if (u > v) std::swap(u, v);
  FuzzyEdge probe{u, v, 0.0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe, edge_less);
  if (it != edges_.end() && it->u == u && it->v == v) return it->mu;
  return 0.0;
}

std::vector<Violation> validate(const FuzzyGraph& g) {
  std::vector<Violation> out;
  for (int v = 0; v < g.order(); ++v) {
    double nu = g.vertex_membership(v);
    if (!(nu >= 0.0 && nu <= 1.0)) {
      out.push_back({Violation::Rule::VertexMembershipRange, v, -1,
                     "vertex " + std::to_string(v) + ": membership " +
                         format_shortest(nu) + " outside [0,1]"});
    }
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    std::string name =
        "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.u == e.v) {
      out.push_back(
          {Violation::Rule::SelfLoop, e.u, e.v, name + ": self-loop"});
      continue;
    }
    if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v) {
      out.push_back(
          {Violation::Rule::DuplicateEdge, e.u, e.v, name + ": duplicate"});
    }
    if (!(e.mu > 0.0)) {
      out.push_back({Violation::Rule::EdgeMembershipRange, e.u, e.v,
                     name + ": non-positive membership " +
                         format_shortest(e.mu)});
    } else if (e.mu > 1.0) {
      out.push_back({Violation::Rule::EdgeMembershipRange, e.u, e.v,
                     name + ": membership " + format_shortest(e.mu) +
                         " above 1"});
    } else {
      double cap = std::min(g.vertex_membership(e.u), g.vertex_membership(e.v));
      if (e.mu > cap) {
        out.push_back({Violation::Rule::AxiomExceeded, e.u, e.v,
                       name + ": membership " + format_shortest(e.mu) +
                           " > min(nu) = " + format_shortest(cap)});
      }
    }
  }
  return out;
}

void validate_or_throw(const FuzzyGraph& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::string msg = "invalid fuzzy graph:";
  for (const auto& v : violations) msg += "\n  " + v.message;
  throw std::invalid_argument(msg);
}

DegreeProfile degree_profile(const FuzzyGraph& g) {
  DegreeProfile p;
  p.degrees.assign(static_cast<std::size_t>(g.order()), 0.0);
  for (const auto& e : g.edges()) {
    p.degrees[static_cast<std::size_t>(e.u)] += e.mu;
    p.degrees[static_cast<std::size_t>(e.v)] += e.mu;
    p.size += e.mu;
  }
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.delta_min = *lo;
    p.delta_max = *hi;
  }
  for (const auto& e : g.edges()) {
    double d = p.degrees[static_cast<std::size_t>(e.u)] +
               p.degrees[static_cast<std::size_t>(e.v)];
    p.edge_degree_max = std::max(p.edge_degree_max, d);
  }
  return p;
}

double fuzzy_size(const FuzzyGraph& g) {
  double m = 0.0;
  for (const auto& e : g.edges()) m += e.mu;
  return m;
}

FuzzyGraph scale_memberships(const FuzzyGraph& g, double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw std::invalid_argument("scale factor " + format_shortest(t) +
                                " outside (0,1]");
  }
  std::vector<double> nu;
  nu.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) nu.push_back(g.vertex_membership(v));
  std::vector<FuzzyEdge> edges = g.edges();
  for (auto& e : edges) e.mu *= t;
  return FuzzyGraph::from_parts(std::move(nu), std::move(edges));
}

FuzzyGraph crisp_support(const FuzzyGraph& g) {
  std::vector<double> nu(static_cast<std::size_t>(g.order()), 1.0);
  std::vector<FuzzyEdge> edges = g.edges();
  for (auto& e : edges) e.mu = 1.0;
  return FuzzyGraph::from_parts(std::move(nu), std::move(edges));
}

FuzzyGraph random_fuzzy_graph(int n, double edge_probability,
                              std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability outside [0,1]");
  }
  Rng rng(seed);
  FuzzyGraph g(n);
  for (int v = 0; v < n; ++v) g.set_vertex_membership(v, 0.5 + 0.5 * rng.u01());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.u01() >= edge_probability) continue;
      double cap = std::min(g.vertex_membership(u), g.vertex_membership(v));
      // (1 - u01) lies in (0,1], so mu stays strictly positive.
      g.add_edge(u, v, cap * (1.0 - rng.u01()));
    }
  }
  return g;
}

FuzzyGraph relabel(const FuzzyGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<double> nu(static_cast<std::size_t>(g.order()), 1.0);
  for (int v = 0; v < g.order(); ++v) {
    nu[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
        g.vertex_membership(v);
  }
  std::vector<FuzzyEdge> edges = g.edges();
  for (auto& e : edges) {
    e.u = perm[static_cast<std::size_t>(e.u)];
    e.v = perm[static_cast<std::size_t>(e.v)];
  }
  return FuzzyGraph::from_parts(std::move(nu), std::move(edges));
}

bool is_connected(const FuzzyGraph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

bool is_tree_support(const FuzzyGraph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

bool is_unicyclic_support(const FuzzyGraph& g) {
  return g.order() >= 3 && g.edge_count() == g.order() && is_connected(g);
}

bool is_complete_support(const FuzzyGraph& g) {
  long long n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

std::vector<int> two_core(const FuzzyGraph& g) {
  int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    degree[static_cast<std::size_t>(v)] =
        static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] <= 1) q.push(v);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (removed[static_cast<std::size_t>(v)]) continue;
    removed[static_cast<std::size_t>(v)] = 1;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      if (--degree[static_cast<std::size_t>(w)] <= 1) q.push(w);
    }
  }
  std::vector<int> core;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) core.push_back(v);
  return core;
}

}  // namespace fuzzytopo
