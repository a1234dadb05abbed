#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "families.hpp"
#include "indices.hpp"
#include "numformat.hpp"

using namespace fuzzytopo;

TEST_CASE("build: uniform scheme") {
  FamilySpec star{Family::Star, 10, 1.0, {}};
  auto s = build(star);
  REQUIRE(s.edge_count() == 9);
  for (const auto& e : s.edges()) CHECK(e.mu == doctest::Approx(1.0 / 9));
  CHECK(degree_profile(s).degrees[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int v = 0; v < s.order(); ++v) CHECK(s.vertex_membership(v) == 1.0);

  FamilySpec tri{Family::Cycle, 3, 0.9, {}};
  auto t = build(tri);
  REQUIRE(t.edge_count() == 3);
  for (const auto& e : t.edges()) CHECK(e.mu == doctest::Approx(0.3));
  for (double d : degree_profile(t).degrees) CHECK(d == doctest::Approx(0.6));

  CHECK(std::abs(fuzzy_size(build(star)) - 1.0) <= 1e-12);
}

TEST_CASE("build: custom scheme and rejections") {
  FamilySpec path{Family::Path, 3, 0.9, {0.2, 0.7}};
  auto p = build(path);
  auto degrees = degree_profile(p).degrees;
  CHECK(degrees[0] == doctest::Approx(0.2));
  CHECK(degrees[1] == doctest::Approx(0.9));
  CHECK(degrees[2] == doctest::Approx(0.7));

  // K2 at m=1.5 forces mu=1.5 > 1
  FamilySpec k2{Family::Complete, 2, 1.5, {}};
  CHECK_THROWS_AS(build(k2), std::invalid_argument);

  FamilySpec bad_len{Family::Path, 3, 0.9, {0.9}};
  CHECK_THROWS_AS(build(bad_len), std::invalid_argument);

  FamilySpec bad_sum{Family::Path, 3, 1.0, {0.2, 0.7}};
  CHECK_THROWS_AS(build(bad_sum), std::invalid_argument);

  FamilySpec bad_mu{Family::Path, 3, 1.5, {0.5, 1.0 + 1e-6}};
  bad_mu.m_mu = 1.5 + 1e-6;
  CHECK_THROWS_AS(build(bad_mu), std::invalid_argument);

  FamilySpec small_cycle{Family::Cycle, 2, 0.5, {}};
  CHECK_THROWS_AS(build(small_cycle), std::invalid_argument);
  FamilySpec small_path{Family::Path, 1, 0.5, {}};
  CHECK_THROWS_AS(build(small_path), std::invalid_argument);
}

TEST_CASE("closed forms: published spot values") {
  CHECK(round_half_away(closed_form_star(10, 1.0 / 9), 4) == 1.0062);
  CHECK(round_half_away(closed_form_star(6, 0.2), 4) == 1.0198);
  CHECK(closed_form_star(2, 1.0) == doctest::Approx(std::sqrt(2.0)));

  CHECK(round_half_away(closed_form_complete(10, 2.0 / 90), 4) == 0.2828);
  CHECK(round_half_away(closed_form_complete(6, 2.0 / 30), 4) == 0.4714);
  CHECK(closed_form_complete(2, 1.0) == doctest::Approx(std::sqrt(2.0)));

  CHECK(round_half_away(closed_form_cycle(10, 1.0), 4) == 0.2828);
  CHECK(round_half_away(closed_form_cycle(8, 0.5), 4) == 0.0884);
  // mu = 1 is the axiom boundary and fine; above it is rejected
  CHECK(closed_form_cycle(4, 4.0) ==
        doctest::Approx(2.0 * std::sqrt(2.0) * 4.0).epsilon(1e-12));
  CHECK_THROWS_AS(closed_form_cycle(4, 4.1), std::invalid_argument);

  CHECK(round_half_away(closed_form_path_uniform(10, 1.0), 4) == 0.2996);
  CHECK(closed_form_path_uniform(3, 1.0) ==
        doctest::Approx(std::sqrt(5.0) / 2).epsilon(1e-12));
  CHECK(round_half_away(closed_form_path_uniform(3, 1.0), 4) == 1.1180);
  CHECK(closed_form_path_uniform(2, 1.0) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("closed form for the printed star-alpha bound") {
  CHECK(round_half_away(closed_form_star_alpha(10, 1.0 / 9, 1.0), 4) == 0.3514);
  CHECK(closed_form_star_alpha(10, 1.0 / 9, 1.0) ==
        doctest::Approx(std::sqrt(10.0) / 9).epsilon(1e-12));
  CHECK_THROWS_AS(closed_form_star_alpha(2, 1.0, 1.0), std::invalid_argument);
  CHECK(round_half_away(closed_form_star_alpha(3, 0.5, 2.0), 4) == 2.4495);
  CHECK(closed_form_star_alpha(3, 0.5, 2.0) ==
        doctest::Approx(2.0 * std::sqrt(1.5)).epsilon(1e-12));
}

TEST_CASE("closed forms equal direct evaluation of the built graph") {
  for (double m : {0.5, 1.0}) {
    for (int n = 2; n <= 50; ++n) {
      for (Family f :
           {Family::Path, Family::Star, Family::Cycle, Family::Complete}) {
        if (f == Family::Cycle && n < 3) continue;
        int edges = family_edge_count(f, n);
        if (m / edges > 1.0) continue;
        FamilySpec spec{f, n, m, {}};
        double direct = sombor(build(spec));
        double closed = closed_form_sombor(f, n, m);
        CHECK(std::abs(direct - closed) <= 1e-12);
      }
    }
  }
}

TEST_CASE("cycle and complete closed forms coincide at equal (n, m)") {
  for (int n : {6, 8, 10, 12, 15, 20, 25, 30, 40, 50}) {
    for (double m : {0.5, 1.0}) {
      CHECK(std::abs(closed_form_sombor(Family::Cycle, n, m) -
                     closed_form_sombor(Family::Complete, n, m)) <= 1e-12);
    }
  }
}

TEST_CASE("family ranking at fixed (n, m): star largest, path smallest") {
  for (int n : {6, 10, 20, 50}) {
    for (double m : {0.5, 1.0}) {
      double path = closed_form_sombor(Family::Path, n, m);
      double star = closed_form_sombor(Family::Star, n, m);
      double cycle = closed_form_sombor(Family::Cycle, n, m);
      double complete = closed_form_sombor(Family::Complete, n, m);
      CHECK(star > path);
      CHECK(star > cycle);
      CHECK(star > complete);
      CHECK(path > cycle);  // uniform cycle sits below the uniform path
    }
  }
}

TEST_CASE("family name round trip") {
  for (Family f : {Family::Path, Family::Star, Family::Cycle, Family::Complete}) {
    CHECK(family_from_string(family_name(f)) == f);
  }
  CHECK_THROWS_AS(family_from_string("wheel"), std::invalid_argument);
}
