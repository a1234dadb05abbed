#pragma once

#include <string>
#include <vector>

#include "enumerate.hpp"
#include "optimize.hpp"

namespace fuzzytopo {

enum class GraphClass { Tree, Unicyclic, Connected };

std::string graph_class_name(GraphClass c);
GraphClass graph_class_from_string(const std::string& name);

/// Extremal query: scan every support of the class at order n, optimize the
/// memberships on each at fixed fuzzy size, rank the optima.
struct SearchTask {
  GraphClass graph_class = GraphClass::Tree;
  int n = 4;
  double m_mu = 1.0;
  IndexKind index;
  Direction direction = Direction::Max;
  OptimizerConfig optimizer;
};

struct SupportOutcome {
  Support support;
  bool feasible = true;  // eps*|E| < m_mu <= |E|
  OptimizeResult result;
};

struct SearchResult {
  SearchTask task;
  std::vector<SupportOutcome> outcomes;  // canonical support order
  int winner = -1;                       // index into outcomes
  std::vector<int> joint_winners;        // all within 1e-9 of the winner

  const SupportOutcome& winning() const { return outcomes[static_cast<std::size_t>(winner)]; }

  /// One row per support: id, edges, best value, memberships, flags.
  std::string to_csv() const;
  /// Human-readable ranking with optimizer certificates.
  std::string to_report() const;
};

/// Runs the task. Per-support optimizations are independent and may execute
/// in parallel; results merge in canonical order, so output is deterministic.
SearchResult extremal_search(const SearchTask& task);

}  // namespace fuzzytopo
