#include "optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "util.hpp"

namespace fuzzytopo {

namespace {

constexpr double kFeasibilityTol = 1e-12;
constexpr double kBoundaryTol = 1e-7;

struct SupportObjective {
  std::vector<FuzzyEdge> edges;
  std::vector<double> degrees;
  IndexKind kind;
  long evaluations = 0;

  SupportObjective(const Support& support, const IndexKind& k)
      : degrees(static_cast<std::size_t>(support.n), 0.0), kind(k) {
    edges.reserve(support.edges.size());
    for (auto [u, v] : support.edges) edges.push_back({u, v, 0.0});
  }

  double value(const std::vector<double>& mu) {
    ++evaluations;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].mu = mu[i];
    detail::fuzzy_degrees(edges, degrees);
    return detail::index_value_raw(edges, degrees, kind);
  }

  void gradient(const std::vector<double>& mu, std::vector<double>& out) {
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].mu = mu[i];
    detail::fuzzy_degrees(edges, degrees);
    detail::index_gradient_raw(edges, degrees, kind, out);
  }
};

bool better(double candidate, double incumbent, Direction direction) {
  return direction == Direction::Max ? candidate > incumbent
                                     : candidate < incumbent;
}

bool near_boundary(const std::vector<double>& mu, double lo, double hi) {
  for (double x : mu) {
    if (x - lo <= kBoundaryTol || hi - x <= kBoundaryTol) return true;
  }
  return false;
}

void require_feasible(int edge_count, double m_mu, double eps) {
  if (edge_count == 0) {
    if (std::abs(m_mu) > kFeasibilityTol) {
      throw std::invalid_argument("no edges to carry a positive fuzzy size");
    }
    return;
  }
  if (!(eps * edge_count < m_mu && m_mu <= edge_count + kFeasibilityTol)) {
    throw std::invalid_argument(
        "infeasible slice: need eps*|E| < m_mu <= |E|");
  }
}

}  // namespace

std::string direction_name(Direction direction) {
  return direction == Direction::Min ? "min" : "max";
}

Direction direction_from_string(const std::string& name) {
  if (name == "min") return Direction::Min;
  if (name == "max") return Direction::Max;
  throw std::invalid_argument("unknown direction '" + name + "'");
}

std::vector<double> project_box_simplex(std::vector<double> y, double total,
                                        double lo, double hi) {
  std::size_t d = y.size();
  if (d == 0) return y;
  if (!(lo * static_cast<double>(d) <= total + kFeasibilityTol &&
        total <= hi * static_cast<double>(d) + kFeasibilityTol)) {
    throw std::invalid_argument("projection target outside the box-simplex");
  }
  auto sum_at = [&](double theta) {
    double s = 0.0;
    for (double v : y) s += std::clamp(v - theta, lo, hi);
    return s;
  };
  double theta_lo = *std::min_element(y.begin(), y.end()) - hi;
  double theta_hi = *std::max_element(y.begin(), y.end()) - lo;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (theta_lo + theta_hi);
    if (sum_at(mid) >= total) {
      theta_lo = mid;
    } else {
      theta_hi = mid;
    }
    if (theta_hi - theta_lo <= 1e-16 * std::max(1.0, std::abs(theta_lo))) break;
  }
  double theta = 0.5 * (theta_lo + theta_hi);
  for (double& v : y) v = std::clamp(v - theta, lo, hi);
  // Kill the bisection residual on the coordinates that are strictly inside.
  for (int pass = 0; pass < 2; ++pass) {
    double residual = total;
    for (double v : y) residual -= v;
    int free_count = 0;
    for (double v : y) {
      if (v > lo + kFeasibilityTol && v < hi - kFeasibilityTol) ++free_count;
    }
    if (free_count == 0 || std::abs(residual) < 1e-15) break;
    double share = residual / free_count;
    for (double& v : y) {
      if (v > lo + kFeasibilityTol && v < hi - kFeasibilityTol) {
        v = std::clamp(v + share, lo, hi);
      }
    }
  }
  return y;
}

OptimizeResult optimize_grid(const Support& support, double m_mu,
                             const IndexKind& index, Direction direction,
                             const OptimizerConfig& cfg) {
  int ec = support.edge_count();
  require_feasible(ec, m_mu, cfg.epsilon_min);

  OptimizeResult res;
  SupportObjective objective(support, index);
  if (ec == 0) {
    res.value = 0.0;
    res.converged = true;
    res.restart_values = {0.0};
    return res;
  }

  double lo = cfg.epsilon_min, hi = 1.0;
  std::vector<double> best(static_cast<std::size_t>(ec),
                           m_mu / static_cast<double>(ec));
  double best_value = objective.value(best);

  if (ec == 1) {
    res.memberships = best;
    res.value = best_value;
    res.converged = true;
    res.boundary = near_boundary(best, lo, hi);
    res.restart_values = {best_value};
    res.evaluations = objective.evaluations;
    return res;
  }

  int d = ec - 1;
  int r = std::max(2, cfg.grid_resolution);
  std::vector<double> box_lo(static_cast<std::size_t>(d), lo);
  std::vector<double> box_hi(static_cast<std::size_t>(d), hi);
  std::vector<double> x(static_cast<std::size_t>(ec), 0.0);

  for (int round = 0; round < 16; ++round) {
    std::function<void(int, double)> sweep = [&](int dim, double used) {
      if (dim == d) {
        double last = m_mu - used;
        if (last < lo - 1e-9 || last > hi + 1e-9) return;
        x[static_cast<std::size_t>(d)] = std::clamp(last, lo, hi);
        double v = objective.value(x);
        if (better(v, best_value, direction)) {
          best_value = v;
          best = x;
        }
        return;
      }
      double a = box_lo[static_cast<std::size_t>(dim)];
      double b = box_hi[static_cast<std::size_t>(dim)];
      for (int i = 0; i < r; ++i) {
        double t = b == a ? a : a + (b - a) * i / (r - 1.0);
        x[static_cast<std::size_t>(dim)] = t;
        // prune: the remaining coordinates cannot absorb what is left
        double remaining = m_mu - used - t;
        int rest = d - dim;  // free dims after this one, plus the last coord
        if (remaining < lo * rest - 1e-9 || remaining > hi * rest + 1e-9) {
          continue;
        }
        sweep(dim + 1, used + t);
      }
    };
    sweep(0, 0.0);

    // shrink the box around the incumbent
    double width = 0.0;
    for (int j = 0; j < d; ++j) {
      width = std::max(width, box_hi[static_cast<std::size_t>(j)] -
                                  box_lo[static_cast<std::size_t>(j)]);
    }
    double half = width * 0.35 * 0.5;
    if (half < 1e-9) break;
    for (int j = 0; j < d; ++j) {
      double c = best[static_cast<std::size_t>(j)];
      box_lo[static_cast<std::size_t>(j)] = std::max(lo, c - half);
      box_hi[static_cast<std::size_t>(j)] = std::min(hi, c + half);
    }
  }

  res.memberships = best;
  res.value = best_value;
  res.converged = true;
  res.boundary = near_boundary(best, lo, hi);
  res.restart_values = {best_value};
  res.evaluations = objective.evaluations;
  return res;
}

OptimizeResult optimize_gradient(const Support& support, double m_mu,
                                 const IndexKind& index, Direction direction,
                                 const OptimizerConfig& cfg) {
  int ec = support.edge_count();
  require_feasible(ec, m_mu, cfg.epsilon_min);

  OptimizeResult res;
  SupportObjective objective(support, index);
  if (ec == 0) {
    res.value = 0.0;
    res.converged = true;
    res.restart_values = {0.0};
    return res;
  }

  double lo = cfg.epsilon_min, hi = 1.0;
  std::vector<double> grad(static_cast<std::size_t>(ec), 0.0);

  bool have_best = false;
  bool best_converged = false;
  for (int restart = 0; restart < std::max(1, cfg.restarts); ++restart) {
    std::vector<double> x;
    if (restart == 0) {
      x.assign(static_cast<std::size_t>(ec), m_mu / static_cast<double>(ec));
    } else {
      Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
      std::vector<double> y(static_cast<std::size_t>(ec));
      for (double& v : y) v = lo + (hi - lo) * rng.u01();
      x = project_box_simplex(std::move(y), m_mu, lo, hi);
    }

    double f = objective.value(x);
    bool converged = false;
    for (int step = 0; step < cfg.gradient_steps; ++step) {
      objective.gradient(x, grad);
      double sign = direction == Direction::Max ? 1.0 : -1.0;
      double s = cfg.step_size;
      bool improved = false;
      double delta = 0.0;
      for (int halving = 0; halving < 40; ++halving) {
        std::vector<double> y(static_cast<std::size_t>(ec));
        for (int i = 0; i < ec; ++i) {
          y[static_cast<std::size_t>(i)] =
              x[static_cast<std::size_t>(i)] +
              sign * s * grad[static_cast<std::size_t>(i)];
        }
        auto cand = project_box_simplex(std::move(y), m_mu, lo, hi);
        double fc = objective.value(cand);
        if (better(fc, f, direction)) {
          delta = std::abs(fc - f);
          x = std::move(cand);
          f = fc;
          improved = true;
          break;
        }
        s *= 0.5;
      }
      if (!improved || delta < cfg.tolerance) {
        converged = true;
        break;
      }
    }

    res.restart_values.push_back(f);
    if (!have_best || better(f, res.value, direction)) {
      have_best = true;
      res.value = f;
      res.memberships = x;
      best_converged = converged;
    }
  }

  res.converged = best_converged;
  res.boundary = near_boundary(res.memberships, lo, hi);
  res.evaluations = objective.evaluations;
  return res;
}

OptimizeResult optimize_memberships(const Support& support, double m_mu,
                                    const IndexKind& index,
                                    Direction direction,
                                    const OptimizerConfig& cfg) {
  if (support.edge_count() <= 4) {
    return optimize_grid(support, m_mu, index, direction, cfg);
  }
  return optimize_gradient(support, m_mu, index, direction, cfg);
}

}  // namespace fuzzytopo
