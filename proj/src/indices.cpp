#include "indices.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace fuzzytopo {

namespace detail {

void fuzzy_degrees(std::span<const FuzzyEdge> edges, std::span<double> out) {
  for (auto& d : out) d = 0.0;
  for (const auto& e : edges) {
    out[static_cast<std::size_t>(e.u)] += e.mu;
    out[static_cast<std::size_t>(e.v)] += e.mu;
  }
}

double index_value_raw(std::span<const FuzzyEdge> edges,
                       std::span<const double> degrees,
                       const IndexKind& kind) {
  double total = 0.0;
  switch (kind.id) {
    case IndexId::Sombor:
      for (const auto& e : edges) {
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        total += e.mu * std::sqrt(du * du + dv * dv);
      }
      return total;
    case IndexId::SomborAlpha:
      if (!(kind.alpha >= 1.0)) {
        throw std::invalid_argument("alpha must be >= 1");
      }
      for (const auto& e : edges) {
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        total += std::pow(e.mu * std::sqrt(du * du + dv * dv), kind.alpha);
      }
      return total;
    case IndexId::ZagrebM1:
      for (double d : degrees) total += d * d;
      return total;
    case IndexId::ZagrebM2:
      for (const auto& e : edges) {
        total += degrees[static_cast<std::size_t>(e.u)] *
                 degrees[static_cast<std::size_t>(e.v)];
      }
      return total;
    case IndexId::Randic:
      for (const auto& e : edges) {
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        assert(du > 0.0 && dv > 0.0);
        total += e.mu / std::sqrt(du * dv);
      }
      return total;
    case IndexId::Nirmala:
      // No edge-membership factor in the Nirmala term.
      for (const auto& e : edges) {
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        assert(du > 0.0 && dv > 0.0);
        total += (du + dv) / std::sqrt(du * dv);
      }
      return total;
  }
  throw std::logic_error("unreachable index id");
}

void index_gradient_raw(std::span<const FuzzyEdge> edges,
                        std::span<const double> degrees, const IndexKind& kind,
                        std::span<double> out) {
  // Each index is a sum of per-edge terms t_e(mu_e, deg_u, deg_v) (per-vertex
  // for M1). d deg_w / d mu_f = 1 exactly when f is incident to w, so the
  // gradient splits into a direct part plus per-vertex accumulators.
  std::vector<double> acc(degrees.size(), 0.0);
  switch (kind.id) {
    case IndexId::Sombor: {
      for (const auto& e : edges) {
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        double rho = std::sqrt(du * du + dv * dv);
        acc[static_cast<std::size_t>(e.u)] += e.mu * du / rho;
        acc[static_cast<std::size_t>(e.v)] += e.mu * dv / rho;
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& f = edges[i];
        double du = degrees[static_cast<std::size_t>(f.u)];
        double dv = degrees[static_cast<std::size_t>(f.v)];
        out[i] = std::sqrt(du * du + dv * dv) +
                 acc[static_cast<std::size_t>(f.u)] +
                 acc[static_cast<std::size_t>(f.v)];
      }
      return;
    }
    case IndexId::SomborAlpha: {
      if (!(kind.alpha >= 1.0)) {
        throw std::invalid_argument("alpha must be >= 1");
      }
      double a = kind.alpha;
      std::vector<double> direct(edges.size(), 0.0);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        double rho = std::sqrt(du * du + dv * dv);
        double term = e.mu * rho;
        double outer = a * std::pow(term, a - 1.0);
        direct[i] = outer * rho;
        acc[static_cast<std::size_t>(e.u)] += outer * e.mu * du / rho;
        acc[static_cast<std::size_t>(e.v)] += outer * e.mu * dv / rho;
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        out[i] = direct[i] + acc[static_cast<std::size_t>(edges[i].u)] +
                 acc[static_cast<std::size_t>(edges[i].v)];
      }
      return;
    }
    case IndexId::ZagrebM1: {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        out[i] = 2.0 * degrees[static_cast<std::size_t>(edges[i].u)] +
                 2.0 * degrees[static_cast<std::size_t>(edges[i].v)];
      }
      return;
    }
    case IndexId::ZagrebM2: {
      for (const auto& e : edges) {
        acc[static_cast<std::size_t>(e.u)] +=
            degrees[static_cast<std::size_t>(e.v)];
        acc[static_cast<std::size_t>(e.v)] +=
            degrees[static_cast<std::size_t>(e.u)];
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        out[i] = acc[static_cast<std::size_t>(edges[i].u)] +
                 acc[static_cast<std::size_t>(edges[i].v)];
      }
      return;
    }
    case IndexId::Randic: {
      for (const auto& e : edges) {
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        double prod = du * dv;
        double pm32 = -0.5 * e.mu * std::pow(prod, -1.5);
        acc[static_cast<std::size_t>(e.u)] += pm32 * dv;
        acc[static_cast<std::size_t>(e.v)] += pm32 * du;
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& f = edges[i];
        double prod = degrees[static_cast<std::size_t>(f.u)] *
                      degrees[static_cast<std::size_t>(f.v)];
        out[i] = 1.0 / std::sqrt(prod) + acc[static_cast<std::size_t>(f.u)] +
                 acc[static_cast<std::size_t>(f.v)];
      }
      return;
    }
    case IndexId::Nirmala: {
      for (const auto& e : edges) {
        double du = degrees[static_cast<std::size_t>(e.u)];
        double dv = degrees[static_cast<std::size_t>(e.v)];
        double prod = du * dv;
        double inv = 1.0 / std::sqrt(prod);
        double pm32 = -0.5 * (du + dv) * std::pow(prod, -1.5);
        acc[static_cast<std::size_t>(e.u)] += inv + pm32 * dv;
        acc[static_cast<std::size_t>(e.v)] += inv + pm32 * du;
      }
      for (std::size_t i = 0; i < edges.size(); ++i) {
        out[i] = acc[static_cast<std::size_t>(edges[i].u)] +
                 acc[static_cast<std::size_t>(edges[i].v)];
      }
      return;
    }
  }
  throw std::logic_error("unreachable index id");
}

}  // namespace detail

namespace {

std::vector<double> degrees_of(const FuzzyGraph& g) {
  std::vector<double> d(static_cast<std::size_t>(g.order()), 0.0);
  detail::fuzzy_degrees(g.edges(), d);
  return d;
}

}  // namespace

double sombor(const FuzzyGraph& g) {
  return index_value(g, IndexKind::sombor());
}

double sombor_alpha(const FuzzyGraph& g, double alpha) {
  return index_value(g, IndexKind::sombor_alpha(alpha));
}

double zagreb_m1(const FuzzyGraph& g) {
  return index_value(g, IndexKind::zagreb_m1());
}

double zagreb_m2(const FuzzyGraph& g) {
  return index_value(g, IndexKind::zagreb_m2());
}

double randic(const FuzzyGraph& g) {
  return index_value(g, IndexKind::randic());
}

double nirmala(const FuzzyGraph& g) {
  return index_value(g, IndexKind::nirmala());
}

double index_value(const FuzzyGraph& g, const IndexKind& kind) {
  auto degrees = degrees_of(g);
  return detail::index_value_raw(g.edges(), degrees, kind);
}

IndexValue index_value_with_terms(const FuzzyGraph& g, const IndexKind& kind) {
  IndexValue out;
  out.kind = kind;
  auto degrees = degrees_of(g);
  if (kind.id == IndexId::ZagrebM1) {
    out.per_vertex_terms = true;
    out.terms.reserve(degrees.size());
    for (double d : degrees) out.terms.push_back(d * d);
  } else {
    out.terms.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
      std::span<const FuzzyEdge> one(&e, 1);
      out.terms.push_back(detail::index_value_raw(one, degrees, kind));
    }
  }
  for (double t : out.terms) out.value += t;
  return out;
}

std::vector<double> sombor_gradient(const FuzzyGraph& g) {
  return index_gradient(g, IndexKind::sombor());
}

std::vector<double> index_gradient(const FuzzyGraph& g,
                                   const IndexKind& kind) {
  auto degrees = degrees_of(g);
  std::vector<double> out(g.edges().size(), 0.0);
  detail::index_gradient_raw(g.edges(), degrees, kind, out);
  return out;
}

std::string index_name(const IndexKind& kind) {
  switch (kind.id) {
    case IndexId::Sombor:
      return "so";
    case IndexId::SomborAlpha:
      return "so_alpha";
    case IndexId::ZagrebM1:
      return "m1";
    case IndexId::ZagrebM2:
      return "m2";
    case IndexId::Randic:
      return "randic";
    case IndexId::Nirmala:
      return "nirmala";
  }
  return "?";
}

IndexKind index_from_string(const std::string& name, double alpha) {
  if (name == "so") return IndexKind::sombor();
  if (name == "so_alpha") return IndexKind::sombor_alpha(alpha);
  if (name == "m1") return IndexKind::zagreb_m1();
  if (name == "m2") return IndexKind::zagreb_m2();
  if (name == "randic") return IndexKind::randic();
  if (name == "nirmala") return IndexKind::nirmala();
  throw std::invalid_argument("unknown index '" + name + "'");
}

}  // namespace fuzzytopo
