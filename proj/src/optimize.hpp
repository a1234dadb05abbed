#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "indices.hpp"

namespace fuzzytopo {

enum class Direction { Min, Max };

std::string direction_name(Direction direction);
Direction direction_from_string(const std::string& name);

/// Knobs for the membership optimizer. epsilon_min keeps every membership
/// strictly positive so the support never degenerates during a run.
struct OptimizerConfig {
  double epsilon_min = 1e-6;
  int grid_resolution = 21;   // points per free dimension (supports <= 4 edges)
  int gradient_steps = 2000;
  double step_size = 0.01;    // initial step, halved while backtracking
  int restarts = 8;
  double tolerance = 1e-8;    // stop when the objective change drops below
  std::uint64_t seed = 0x66757a7aULL;
};

struct OptimizeResult {
  std::vector<double> memberships;  // aligned with the support's edge order
  double value = 0.0;
  bool converged = false;
  bool boundary = false;              // optimum pinned at epsilon_min or 1
  std::vector<double> restart_values; // best value per restart (certificates)
  long evaluations = 0;
};

/// Euclidean projection onto {x in [lo,hi]^d : sum x = total}, computed by
/// bisecting the Lagrange shift; deterministic. Throws when the slice is
/// empty.
std::vector<double> project_box_simplex(std::vector<double> y, double total,
                                        double lo, double hi);

/// Best memberships found on {mu in [eps,1]^E : sum mu = m_mu} for the given
/// index and direction. Supports with at most 4 edges take an exhaustive grid
/// with local refinement, larger ones multi-start projected gradient. The
/// uniform point is always a candidate, so the result never loses to it.
OptimizeResult optimize_memberships(const Support& support, double m_mu,
                                    const IndexKind& index,
                                    Direction direction,
                                    const OptimizerConfig& cfg);

// Individual strategies, exposed for the grid/gradient agreement checks.
OptimizeResult optimize_grid(const Support& support, double m_mu,
                             const IndexKind& index, Direction direction,
                             const OptimizerConfig& cfg);
OptimizeResult optimize_gradient(const Support& support, double m_mu,
                                 const IndexKind& index, Direction direction,
                                 const OptimizerConfig& cfg);

}  // namespace fuzzytopo
