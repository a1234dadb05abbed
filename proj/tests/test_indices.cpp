#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "families.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "numformat.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace fuzzytopo;

namespace {

FuzzyGraph family(Family f, int n, double m) {
  FamilySpec spec{f, n, m, {}};
  return build(spec);
}

double rounded4(double x) { return round_half_away(x, 4); }

}  // namespace

TEST_CASE("sombor on the reference families") {
  CHECK(rounded4(sombor(family(Family::Star, 10, 1))) == doctest::Approx(1.0062));
  CHECK(rounded4(sombor(family(Family::Cycle, 6, 1))) == doctest::Approx(0.4714));
  CHECK(rounded4(sombor(family(Family::Complete, 10, 1))) ==
        doctest::Approx(0.2828));
  CHECK(sombor(FuzzyGraph()) == 0.0);
  CHECK(sombor(FuzzyGraph(4)) == 0.0);
}

TEST_CASE("sombor_alpha") {
  for (int seed = 0; seed < 20; ++seed) {
    auto g = random_fuzzy_graph(3 + seed % 8, 0.6, 400 + seed);
    CHECK(sombor_alpha(g, 1.0) == sombor(g));  // exact reduction
  }
  CHECK(rounded4(sombor_alpha(family(Family::Cycle, 10, 1), 2.0)) ==
        doctest::Approx(0.0080));

  FuzzyGraph e(2);
  e.add_edge(0, 1, 1.0);
  CHECK(sombor_alpha(e, 2.0) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(sombor_alpha(e, 0.5), std::invalid_argument);
}

TEST_CASE("zagreb indices") {
  CHECK(rounded4(zagreb_m1(family(Family::Path, 10, 1))) ==
        doctest::Approx(0.4198));
  CHECK(rounded4(zagreb_m1(family(Family::Star, 10, 1))) ==
        doctest::Approx(1.1111));
  CHECK(rounded4(zagreb_m1(family(Family::Cycle, 10, 1))) ==
        doctest::Approx(0.4000));

  CHECK(zagreb_m2(family(Family::Cycle, 10, 1)) ==
        doctest::Approx(0.4).epsilon(1e-12));
  CHECK(zagreb_m2(family(Family::Star, 10, 1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  FuzzyGraph e(2);
  e.add_edge(0, 1, 1.0);
  CHECK(zagreb_m2(e) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("randic and nirmala") {
  CHECK(rounded4(randic(family(Family::Star, 10, 1))) == doctest::Approx(3.0));
  CHECK(rounded4(randic(family(Family::Cycle, 10, 1))) == doctest::Approx(5.0));
  // direct summation: 2/sqrt(2) + 7/2, not the published 6.364
  CHECK(rounded4(randic(family(Family::Path, 10, 1))) ==
        doctest::Approx(4.9142));

  CHECK(nirmala(family(Family::Path, 10, 1)) ==
        doctest::Approx(14.0 + 3.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(rounded4(nirmala(family(Family::Path, 10, 1))) ==
        doctest::Approx(18.2426));
  CHECK(rounded4(nirmala(family(Family::Star, 10, 1))) == doctest::Approx(30.0));
  CHECK(rounded4(nirmala(family(Family::Complete, 10, 1))) ==
        doctest::Approx(90.0));
}

TEST_CASE("per-term breakdown sums to the value in canonical order") {
  auto g = random_fuzzy_graph(9, 0.5, 31);
  for (auto kind :
       {IndexKind::sombor(), IndexKind::sombor_alpha(1.7), IndexKind::zagreb_m1(),
        IndexKind::zagreb_m2(), IndexKind::randic(), IndexKind::nirmala()}) {
    auto value = index_value_with_terms(g, kind);
    double total = 0.0;
    for (double t : value.terms) {
      CHECK(t >= 0.0);
      total += t;
    }
    CHECK(total == doctest::Approx(index_value(g, kind)).epsilon(1e-12));
    CHECK(value.per_vertex_terms == (kind.id == IndexId::ZagrebM1));
    CHECK(value.terms.size() ==
          (value.per_vertex_terms ? static_cast<std::size_t>(g.order())
                                  : g.edges().size()));
    CHECK(value.value >= 0.0);
  }
}

TEST_CASE("sombor gradient: closed form on a single edge") {
  for (double t : {0.25, 0.5, 0.9}) {
    FuzzyGraph e(2);
    e.add_edge(0, 1, t);
    auto grad = sombor_gradient(e);
    REQUIRE(grad.size() == 1);
    CHECK(grad[0] ==
          doctest::Approx(2.0 * std::sqrt(2.0) * t).epsilon(1e-12));
  }
  CHECK(sombor_gradient(FuzzyGraph()).empty());
  CHECK(sombor_gradient(FuzzyGraph(3)).empty());
}

TEST_CASE("gradients match central finite differences for every index") {
  int checked = 0;
  for (int seed = 0; checked < 25; ++seed) {
    auto g = random_fuzzy_graph(3 + seed % 8, 0.7, 1700 + seed);
    if (g.edge_count() == 0) continue;
    ++checked;
    for (auto kind :
         {IndexKind::sombor(), IndexKind::sombor_alpha(1.5),
          IndexKind::sombor_alpha(2.0), IndexKind::zagreb_m1(),
          IndexKind::zagreb_m2(), IndexKind::randic(), IndexKind::nirmala()}) {
      auto analytic = index_gradient(g, kind);
      auto numeric = oracle::finite_difference_gradient(g, kind, 1e-6);
      REQUIRE(analytic.size() == numeric.size());
      for (std::size_t i = 0; i < analytic.size(); ++i) {
        double scale = std::max(1e-6, std::abs(numeric[i]));
        CHECK(std::abs(analytic[i] - numeric[i]) / scale <= 1e-5);
      }
    }
  }
}

TEST_CASE("homogeneity under membership scaling") {
  for (int seed = 0; seed < 30; ++seed) {
    auto g = random_fuzzy_graph(2 + seed % 11, 0.5, 2200 + seed);
    double so = sombor(g), m1 = zagreb_m1(g), m2 = zagreb_m2(g);
    double r = randic(g), nm = nirmala(g);
    for (double t : {0.1, 0.5, 0.9}) {
      auto h = scale_memberships(g, t);
      CHECK(std::abs(sombor(h) - t * t * so) <= 1e-9 * (1.0 + so));
      CHECK(std::abs(zagreb_m1(h) - t * t * m1) <= 1e-9 * (1.0 + m1));
      CHECK(std::abs(zagreb_m2(h) - t * t * m2) <= 1e-9 * (1.0 + m2));
      if (g.edge_count() > 0) {
        CHECK(std::abs(randic(h) - r) <= 1e-9 * (1.0 + r));
        CHECK(std::abs(nirmala(h) - nm) <= 1e-9 * (1.0 + nm));
      }
      for (double alpha : {1.5, 2.0}) {
        double expected = std::pow(t, 2.0 * alpha) * sombor_alpha(g, alpha);
        CHECK(std::abs(sombor_alpha(h, alpha) - expected) <=
              1e-9 * (1.0 + sombor_alpha(g, alpha)));
      }
    }
  }
}

TEST_CASE("crisp reduction equals the classical Sombor index") {
  for (int seed = 0; seed < 40; ++seed) {
    auto g = random_fuzzy_graph(2 + seed % 11, 0.6, 5100 + seed);
    auto c = crisp_support(g);
    CHECK(std::abs(sombor(c) - oracle::classical_sombor_crisp(g)) <= 1e-12);
  }
}

TEST_CASE("sombor strictly increases with any membership increase") {
  Rng rng(606);
  int done = 0;
  for (int attempt = 0; done < 80; ++attempt) {
    REQUIRE(attempt < 4000);
    int n = 3 + attempt % 8;
    auto g = random_fuzzy_graph(n, 0.5, 8800 + attempt);
    double before = sombor(g);

    std::vector<double> nu;
    for (int v = 0; v < n; ++v) nu.push_back(g.vertex_membership(v));
    auto edges = g.edges();

    if (rng.u01() < 0.5 && !edges.empty()) {
      // raise an existing membership within the axiom
      std::size_t k = static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(edges.size()) - 1));
      double cap = std::min({nu[static_cast<std::size_t>(edges[k].u)],
                             nu[static_cast<std::size_t>(edges[k].v)], 1.0});
      double headroom = cap - edges[k].mu;
      if (headroom <= 1e-9) continue;
      edges[k].mu += headroom * (0.1 + 0.8 * rng.u01());
    } else {
      // add a new edge on a free pair
      int u = rng.uniform_int(0, n - 1);
      int v = rng.uniform_int(0, n - 1);
      if (u == v || g.has_edge(u, v)) continue;
      double cap = std::min(nu[static_cast<std::size_t>(u)],
                            nu[static_cast<std::size_t>(v)]);
      edges.push_back({u, v, cap * (0.1 + 0.8 * rng.u01())});
    }
    auto h = FuzzyGraph::from_parts(nu, edges);
    CHECK(sombor(h) > before);
    ++done;
  }
}

TEST_CASE("index name round trip") {
  for (auto kind :
       {IndexKind::sombor(), IndexKind::sombor_alpha(2.0), IndexKind::zagreb_m1(),
        IndexKind::zagreb_m2(), IndexKind::randic(), IndexKind::nirmala()}) {
    auto back = index_from_string(index_name(kind), kind.alpha);
    CHECK(back.id == kind.id);
  }
  CHECK_THROWS_AS(index_from_string("sombor?", 1.0), std::invalid_argument);
}
