#include "families.hpp"

#include <cmath>
#include <stdexcept>

#include "numformat.hpp"

namespace fuzzytopo {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::vector<std::pair<int, int>> family_edges(Family family, int n) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::Path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::Star:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::Cycle:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 1, 0);
      break;
    case Family::Complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
  }
  return edges;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::Path:
      return "path";
    case Family::Star:
      return "star";
    case Family::Cycle:
      return "cycle";
    case Family::Complete:
      return "complete";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  if (name == "path") return Family::Path;
  if (name == "star") return Family::Star;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  throw std::invalid_argument("unknown family '" + name + "'");
}

int family_edge_count(Family family, int n) {
  switch (family) {
    case Family::Path:
    case Family::Star:
      return n - 1;
    case Family::Cycle:
      return n;
    case Family::Complete:
      return n * (n - 1) / 2;
  }
  return 0;
}

FuzzyGraph build(const FamilySpec& spec) {
  int min_n = spec.family == Family::Cycle ? 3 : 2;
  require(spec.n >= min_n, family_name(spec.family) + " requires n >= " +
                               std::to_string(min_n));
  require(spec.m_mu > 0.0, "fuzzy size must be positive");

  auto edges = family_edges(spec.family, spec.n);
  auto k = edges.size();

  std::vector<double> memberships;
  if (spec.custom.empty()) {
    double mu = spec.m_mu / static_cast<double>(k);
    require(mu > 0.0 && mu <= 1.0,
            "uniform membership " + format_shortest(mu) + " outside (0,1]");
    memberships.assign(k, mu);
  } else {
    require(spec.custom.size() == k,
            "custom scheme needs " + std::to_string(k) + " memberships, got " +
                std::to_string(spec.custom.size()));
    double sum = 0.0;
    for (double mu : spec.custom) {
      require(mu > 0.0 && mu <= 1.0,
              "custom membership " + format_shortest(mu) + " outside (0,1]");
      sum += mu;
    }
    require(std::abs(sum - spec.m_mu) <= 1e-9,
            "custom memberships sum to " + format_shortest(sum) +
                ", expected " + format_shortest(spec.m_mu));
    memberships = spec.custom;
  }

  FuzzyGraph g(spec.n);
  for (std::size_t i = 0; i < k; ++i) {
    g.add_edge(edges[i].first, edges[i].second, memberships[i]);
  }
  return g;
}

double closed_form_star(int n, double p) {
  require(n >= 2, "star closed form requires n >= 2");
  require(p > 0.0 && p <= 1.0, "membership outside (0,1]");
  double center = (n - 1) * p;
  return center * std::sqrt(center * center + p * p);
}

double closed_form_complete(int n, double p) {
  require(n >= 2, "complete closed form requires n >= 2");
  require(p > 0.0 && p <= 1.0, "membership outside (0,1]");
  return 0.5 * kSqrt2 * n * (n - 1.0) * (n - 1.0) * p * p;
}

double closed_form_cycle(int n, double m_mu) {
  require(n >= 3, "cycle closed form requires n >= 3");
  require(m_mu > 0.0 && m_mu / n <= 1.0,
          "uniform membership m_mu/n outside (0,1]");
  return 2.0 * kSqrt2 * m_mu * m_mu / n;
}

double closed_form_path_uniform(int n, double m_mu) {
  require(n >= 2, "path closed form requires n >= 2");
  double eta = m_mu / (n - 1.0);
  require(eta > 0.0 && eta <= 1.0,
          "uniform membership m_mu/(n-1) outside (0,1]");
  if (n == 2) return kSqrt2 * m_mu * m_mu;
  // Two end terms eta*sqrt(eta^2 + (2 eta)^2) and n-3 interior terms
  // eta*sqrt(2) * 2 eta.
  return eta * eta * (2.0 * std::sqrt(5.0) + 2.0 * kSqrt2 * (n - 3.0));
}

double closed_form_star_alpha(int n, double p, double alpha) {
  require(n >= 3, "star alpha bound requires n >= 3");
  require(p > 0.0 && p <= 1.0, "membership outside (0,1]");
  require(alpha >= 1.0, "alpha must be >= 1");
  double growth = std::pow(n - 1.0, alpha);
  return growth * p * std::sqrt(growth * p * p + alpha * p * p);
}

double closed_form_sombor(Family family, int n, double m_mu) {
  switch (family) {
    case Family::Path:
      return closed_form_path_uniform(n, m_mu);
    case Family::Star:
      return closed_form_star(n, m_mu / (n - 1.0));
    case Family::Cycle:
      return closed_form_cycle(n, m_mu);
    case Family::Complete:
      return closed_form_complete(n, 2.0 * m_mu / (n * (n - 1.0)));
  }
  throw std::logic_error("unreachable family");
}

}  // namespace fuzzytopo
