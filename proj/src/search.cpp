#include "search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "numformat.hpp"
#include "util.hpp"

namespace fuzzytopo {

namespace {

constexpr double kTieTol = 1e-9;

std::vector<Support> supports_for(const SearchTask& task) {
  switch (task.graph_class) {
    case GraphClass::Tree:
      if (task.n < 2 || task.n > 12) {
        throw std::invalid_argument("tree search supports n in [2, 12]");
      }
      return enumerate_trees(task.n);
    case GraphClass::Unicyclic:
      if (task.n < 3 || task.n > 9) {
        throw std::invalid_argument("unicyclic search supports n in [3, 9]");
      }
      return enumerate_unicyclic(task.n);
    case GraphClass::Connected:
      if (task.n < 3 || task.n > 7) {
        throw std::invalid_argument("connected search supports n in [3, 7]");
      }
      return enumerate_connected(task.n);
  }
  throw std::logic_error("unreachable graph class");
}

std::string join_edges(const Support& s) {
  std::string out;
  for (const auto& [u, v] : s.edges) {
    if (!out.empty()) out += ';';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

std::string join_values(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ';';
    out += format_shortest(v);
  }
  return out;
}

}  // namespace

std::string graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::Tree:
      return "tree";
    case GraphClass::Unicyclic:
      return "unicyclic";
    case GraphClass::Connected:
      return "connected";
  }
  return "?";
}

GraphClass graph_class_from_string(const std::string& name) {
  if (name == "tree") return GraphClass::Tree;
  if (name == "unicyclic") return GraphClass::Unicyclic;
  if (name == "connected") return GraphClass::Connected;
  throw std::invalid_argument("unknown graph class '" + name + "'");
}

SearchResult extremal_search(const SearchTask& task) {
  if (!(task.m_mu > 0.0)) {
    throw std::invalid_argument("fuzzy size must be positive");
  }
  auto supports = supports_for(task);
  int densest = 0;
  for (const auto& s : supports) densest = std::max(densest, s.edge_count());
  if (task.m_mu > densest + 1e-12) {
    throw std::invalid_argument("fuzzy size exceeds the densest support");
  }

  SearchResult result;
  result.task = task;
  result.outcomes.resize(supports.size());

  auto run_one = [&](std::size_t i) {
    SupportOutcome& out = result.outcomes[i];
    out.support = supports[i];
    int ec = out.support.edge_count();
    out.feasible = task.optimizer.epsilon_min * ec < task.m_mu &&
                   task.m_mu <= ec + 1e-12;
    if (out.feasible) {
      out.result = optimize_memberships(out.support, task.m_mu, task.index,
                                        task.direction, task.optimizer);
    }
  };

  int workers = std::min<int>(worker_count(), static_cast<int>(supports.size()));
  if (workers > 1 && supports.size() > 4) {
    std::vector<std::future<void>> futures;
    futures.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < supports.size();
             i += static_cast<std::size_t>(workers)) {
          run_one(i);
        }
      }));
    }
    for (auto& f : futures) f.get();
  } else {
    for (std::size_t i = 0; i < supports.size(); ++i) run_one(i);
  }

  // True extremum first; the winner is the first support within the tie
  // tolerance of it, so ties resolve in canonical order.
  bool have_best = false;
  double best = 0.0;
  for (const auto& out : result.outcomes) {
    if (!out.feasible) continue;
    if (!have_best || (task.direction == Direction::Max
                           ? out.result.value > best
                           : out.result.value < best)) {
      have_best = true;
      best = out.result.value;
    }
  }
  if (!have_best) {
    throw std::invalid_argument("no feasible support for this task");
  }
  for (std::size_t i = 0; i < result.outcomes.size(); ++i) {
    if (result.outcomes[i].feasible &&
        std::abs(result.outcomes[i].result.value - best) <= kTieTol) {
      result.joint_winners.push_back(static_cast<int>(i));
    }
  }
  result.winner = result.joint_winners.front();
  return result;
}

std::string SearchResult::to_csv() const {
  std::string csv =
      "support_id,n,edges,value,memberships,converged,boundary,winner,tie\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& out = outcomes[i];
    bool tie = std::find(joint_winners.begin(), joint_winners.end(),
                         static_cast<int>(i)) != joint_winners.end();
    csv += out.support.id;
    csv += ',' + std::to_string(out.support.n);
    csv += ',' + join_edges(out.support);
    if (out.feasible) {
      csv += ',' + format_shortest(out.result.value);
      csv += ',' + join_values(out.result.memberships);
      csv += out.result.converged ? ",1" : ",0";
      csv += out.result.boundary ? ",1" : ",0";
    } else {
      csv += ",infeasible,,0,0";
    }
    csv += static_cast<int>(i) == winner ? ",1" : ",0";
    csv += tie ? ",1\n" : ",0\n";
  }
  return csv;
}

std::string SearchResult::to_report() const {
  std::string rep = "extremal search: class=" + graph_class_name(task.graph_class) +
                    " n=" + std::to_string(task.n) +
                    " m_mu=" + format_shortest(task.m_mu) +
                    " index=" + index_name(task.index) +
                    " direction=" + direction_name(task.direction) + "\n";
  int feasible = 0;
  for (const auto& out : outcomes) feasible += out.feasible ? 1 : 0;
  rep += "supports: " + std::to_string(outcomes.size()) + " (" +
         std::to_string(feasible) + " feasible)\n";
  const auto& win = winning();
  rep += "winner: " + win.support.id + " value=" +
         format_shortest(win.result.value) + " memberships=[" +
         join_values(win.result.memberships) + "]" +
         (win.result.boundary ? " boundary" : "") +
         (win.result.converged ? " converged" : " not-converged") + "\n";
  if (joint_winners.size() > 1) {
    rep += "joint winners (within 1e-9):";
    for (int i : joint_winners) {
      rep += ' ' + outcomes[static_cast<std::size_t>(i)].support.id;
    }
    rep += '\n';
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].feasible) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    double va = outcomes[a].result.value, vb = outcomes[b].result.value;
    return task.direction == Direction::Max ? va > vb : va < vb;
  });
  rep += "ranking:\n";
  int rank = 0;
  for (std::size_t i : order) {
    const auto& out = outcomes[i];
    rep += "  " + std::to_string(++rank) + ". " + out.support.id +
           " value=" + format_shortest(out.result.value) + " edges=" +
           join_edges(out.support) + " restarts=[" +
           join_values(out.result.restart_values) + "]" +
           (out.result.boundary ? " boundary" : "") + "\n";
  }
  for (const auto& out : outcomes) {
    if (!out.feasible) rep += "  - " + out.support.id + " infeasible\n";
  }
  return rep;
}

}  // namespace fuzzytopo
