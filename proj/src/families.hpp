#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace fuzzytopo {

enum class Family { Path, Star, Cycle, Complete };

std::string family_name(Family family);
Family family_from_string(const std::string& name);

/// Number of edges of the family on n vertices.
int family_edge_count(Family family, int n);

/// Standard family at a target fuzzy size. All vertex memberships are 1.
/// An empty `custom` means the uniform scheme (every edge m_mu / edge count);
/// otherwise `custom` lists one membership per edge in construction order
/// (path: left to right; star: leaf 1..n-1; cycle: (0,1),...,(n-2,n-1),(n-1,0);
/// complete: pairs in lexicographic order) and must sum to m_mu.
struct FamilySpec {
  Family family = Family::Path;
  int n = 2;
  double m_mu = 1.0;
  std::vector<double> custom;
};

/// Builds the family graph; rejects specs whose memberships leave (0,1].
FuzzyGraph build(const FamilySpec& spec);

// Closed forms for the uniform-scheme Sombor value of each family. Each one
// matches sombor(build(...)) to within 1e-12 on its admissible domain.

/// Star on n >= 2 vertices with every edge at membership p: the center has
/// fuzzy degree (n-1)p and each leaf p.
double closed_form_star(int n, double p);

/// Complete graph on n >= 2 vertices, every edge at membership p.
double closed_form_complete(int n, double p);

/// Cycle on n >= 3 vertices at fuzzy size m_mu, uniform membership m_mu/n.
double closed_form_cycle(int n, double m_mu);

/// Path on n >= 2 vertices at fuzzy size m_mu, uniform membership
/// m_mu/(n-1).
double closed_form_path_uniform(int n, double m_mu);

/// Printed upper-bound expression for the general Sombor index of the star,
/// evaluated verbatim as (n-1)^alpha * p * sqrt((n-1)^alpha p^2 + alpha p^2).
/// Requires n >= 3 and alpha >= 1. This is a bound formula, not the star's
/// value; the claim checker compares it against direct evaluation.
double closed_form_star_alpha(int n, double p, double alpha);

/// Uniform-scheme closed form for a family at (n, m_mu).
double closed_form_sombor(Family family, int n, double m_mu);

}  // namespace fuzzytopo
