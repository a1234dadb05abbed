#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <sstream>

#include "claims.hpp"
#include "graph_io.hpp"
#include "numformat.hpp"

using namespace fuzzytopo;

namespace {

FuzzyGraph family(Family f, int n, double m) {
  FamilySpec spec{f, n, m, {}};
  return build(spec);
}

FuzzyGraph single_edge(double mu) {
  FuzzyGraph g(2);
  g.add_edge(0, 1, mu);
  return g;
}

const CheckOutcome& variant(const std::vector<CheckOutcome>& outs,
                            const std::string& name) {
  for (const auto& o : outs) {
    if (o.variant == name) return o;
  }
  REQUIRE(false);
  return outs.front();
}

}  // namespace

TEST_CASE("handshake is an identity") {
  auto outs = check_claim(ClaimId::Handshake, family(Family::Cycle, 7, 1));
  REQUIRE(outs.size() == 1);
  CHECK(outs[0].holds);
  CHECK(std::abs(outs[0].margin) <= 1e-9);

  auto report = verify_random(ClaimId::Handshake, 300, 2, 12, 7);
  CHECK(report.instances_tested == 300);
  CHECK(report.holds_count == 300);
  CHECK(report.violations.empty());
  CHECK(std::abs(report.min_margin) <= 1e-9);
}

TEST_CASE("lower bound sqrt2 m delta: regular graphs attain equality") {
  auto outs =
      check_claim(ClaimId::LowerSqrt2MDelta, family(Family::Cycle, 10, 1));
  REQUIRE(outs.size() == 1);
  CHECK(outs[0].holds);
  CHECK(round_half_away(outs[0].lhs, 4) == 0.2828);
  CHECK(round_half_away(outs[0].rhs, 4) == 0.2828);
  CHECK(std::abs(outs[0].margin) <= 1e-9);

  auto report = verify_random(ClaimId::LowerSqrt2MDelta, 400, 3, 10, 11);
  CHECK(report.violations.empty());
  CHECK(report.holds_count == report.instances_tested);
}

TEST_CASE("upper bound sqrt2 m (n-1) under both readings of m") {
  auto outs = check_claim(ClaimId::UpperSqrt2MN1, family(Family::Star, 10, 1));
  REQUIRE(outs.size() == 1);
  CHECK(outs[0].holds);
  CHECK(round_half_away(outs[0].lhs, 4) == 1.0062);
  CHECK(outs[0].rhs ==
        doctest::Approx(std::sqrt(2.0) * 9.0).epsilon(1e-12));

  ClaimOptions edges_reading;
  edges_reading.read_m_as_edge_count = true;
  auto report =
      verify_random(ClaimId::UpperSqrt2MN1, 300, 3, 10, 13, edges_reading);
  CHECK(report.violations.empty());
  auto report2 = verify_random(ClaimId::UpperSqrt2MN1, 300, 3, 10, 13);
  CHECK(report2.violations.empty());
}

TEST_CASE("path-minimality scope finding: the uniform cycle undercuts it") {
  std::vector<std::pair<std::string, FuzzyGraph>> instances;
  instances.emplace_back("cycle-n10-m1", family(Family::Cycle, 10, 1));
  instances.emplace_back("path-n10-m1", family(Family::Path, 10, 1));
  auto report = verify_instances(ClaimId::PathMinConnected, instances);

  CHECK(report.instances_tested == 2);
  CHECK(report.holds_count == 1);  // the path itself attains the bound
  REQUIRE(report.violations.size() == 1);
  const auto& v = report.violations[0];
  CHECK(v.instance == "cycle-n10-m1");
  CHECK(round_half_away(v.outcome.lhs, 4) == 0.2828);
  CHECK(round_half_away(v.outcome.rhs, 4) == 0.2996);
  CHECK(v.outcome.margin < 0.0);
  CHECK(v.outcome.notes.find("scope finding") != std::string::npos);
  CHECK(report.summary().find("counterexample graph:") != std::string::npos);

  // violation records replay: the serialized graph reproduces lhs and rhs
  auto replay = parse_graph(v.graph_text);
  auto outs = check_claim(ClaimId::PathMinConnected, replay);
  CHECK(std::abs(outs[0].lhs - v.outcome.lhs) <= 1e-12);
  CHECK(std::abs(outs[0].rhs - v.outcome.rhs) <= 1e-12);
}

TEST_CASE("tree claims are not applicable off trees") {
  auto outs = check_claim(ClaimId::PathMinTrees, family(Family::Cycle, 6, 1));
  CHECK_FALSE(outs[0].applicable);
  auto outs2 = check_claim(ClaimId::TreeSandwich, family(Family::Cycle, 6, 1));
  for (const auto& o : outs2) CHECK_FALSE(o.applicable);
}

TEST_CASE("tree sandwich on trees, instance mode") {
  auto outs = check_claim(ClaimId::TreeSandwich, family(Family::Path, 7, 1));
  REQUIRE(outs.size() == 2);
  CHECK(variant(outs, "lower").holds);
  CHECK(variant(outs, "upper").holds);
  CHECK(std::abs(variant(outs, "lower").margin) <= 1e-9);  // path attains it

  auto star_outs = check_claim(ClaimId::TreeSandwich, family(Family::Star, 7, 1));
  CHECK(std::abs(variant(star_outs, "upper").margin) <= 1e-9);
}

TEST_CASE("kn bounds hold on random instances") {
  auto report = verify_random(ClaimId::KnMax, 300, 2, 10, 17);
  CHECK(report.violations.empty());
  ClaimOptions options;
  options.alpha = 1.5;
  auto report2 = verify_random(ClaimId::KnAlphaMax, 200, 2, 9, 19, options);
  CHECK(report2.violations.empty());

  // uniform complete graph attains the kn bound
  auto outs = check_claim(ClaimId::KnMax, family(Family::Complete, 6, 1));
  CHECK(outs[0].holds);
  CHECK(std::abs(outs[0].margin) <= 1e-9);
}

TEST_CASE("complete bounds: two-sided on uniform, upper-only otherwise") {
  auto outs = check_claim(ClaimId::CompleteBounds, family(Family::Complete, 5, 1));
  REQUIRE(outs.size() == 2);
  CHECK(variant(outs, "lower").holds);
  CHECK(variant(outs, "upper").holds);
  CHECK(std::abs(variant(outs, "upper").margin) <= 1e-9);

  FuzzyGraph skew(3);
  skew.add_edge(0, 1, 0.9);
  skew.add_edge(0, 2, 0.4);
  skew.add_edge(1, 2, 0.4);
  auto outs2 = check_claim(ClaimId::CompleteBounds, skew);
  CHECK_FALSE(variant(outs2, "lower").applicable);
  CHECK(variant(outs2, "upper").holds);

  auto outs3 = check_claim(ClaimId::CompleteBounds, family(Family::Path, 5, 1));
  for (const auto& o : outs3) CHECK_FALSE(o.applicable);
}

TEST_CASE("randic relation: printed form fails, squared form holds") {
  auto outs = check_claim(ClaimId::RandicLower, single_edge(0.5));
  const auto& printed = variant(outs, "as_printed");
  CHECK_FALSE(printed.holds);  // sqrt2*R*delta = 0.7071 > SO = 0.3536
  CHECK(round_half_away(printed.lhs, 4) == 0.3536);
  CHECK(round_half_away(printed.rhs, 4) == 0.7071);
  const auto& squared = variant(outs, "delta_squared");
  CHECK(squared.holds);
  CHECK(std::abs(squared.margin) <= 1e-9);  // equality on a single edge

  auto report = verify_random(ClaimId::RandicLower, 300, 3, 10, 23);
  int squared_violations = 0;
  for (const auto& v : report.violations) {
    if (v.outcome.variant == "delta_squared") ++squared_violations;
  }
  CHECK(squared_violations == 0);
}

TEST_CASE("zagreb bounds") {
  // regular instance: hypothesis met, bound holds
  auto outs = check_claim(ClaimId::ZagrebUpper, family(Family::Cycle, 8, 1));
  CHECK(outs[0].applicable);
  CHECK(outs[0].holds);

  // irregular instance: evaluated but flagged out of hypothesis
  auto outs2 = check_claim(ClaimId::ZagrebUpper, family(Family::Star, 8, 1));
  CHECK_FALSE(outs2[0].applicable);
  CHECK(outs2[0].notes.find("hypothesis unmet") != std::string::npos);

  // the printed irregular bound fails for weak memberships; documented finding
  auto outs3 = check_claim(ClaimId::ZagrebIrregular, single_edge(0.5));
  CHECK_FALSE(outs3[0].holds);
  CHECK(outs3[0].rhs == doctest::Approx(0.25).epsilon(1e-9));
  auto outs4 = check_claim(ClaimId::ZagrebIrregular, single_edge(1.0));
  CHECK(outs4[0].holds);
}

TEST_CASE("nirmala upper bounds, both printed forms") {
  auto outs = check_claim(ClaimId::NirmalaUpper, family(Family::Star, 10, 1));
  const auto& reduced = variant(outs, "reduced");
  CHECK(reduced.holds);
  CHECK(round_half_away(reduced.rhs, 4) == 21.2132);  // 30 / sqrt2
  CHECK(round_half_away(reduced.lhs, 4) == 1.0062);
  const auto& longform = variant(outs, "long");
  CHECK(longform.holds);

  // reduced form holds on every valid instance (term-wise AM-GM)
  auto report = verify_random(ClaimId::NirmalaUpper, 300, 3, 10, 29);
  for (const auto& v : report.violations) {
    CHECK(v.outcome.variant != "reduced");
  }
}

TEST_CASE("star alpha bound: violated at alpha=1, holds at alpha=2") {
  ClaimOptions a1;
  a1.alpha = 1.0;
  auto outs = check_claim(ClaimId::StarAlphaUpper, family(Family::Star, 10, 1), a1);
  REQUIRE(outs.size() == 1);
  CHECK(outs[0].applicable);
  CHECK_FALSE(outs[0].holds);
  CHECK(round_half_away(outs[0].rhs, 4) == 0.3514);
  CHECK(round_half_away(outs[0].lhs, 4) == 1.0062);

  ClaimOptions a2;
  a2.alpha = 2.0;
  auto outs2 = check_claim(ClaimId::StarAlphaUpper, family(Family::Star, 10, 1), a2);
  CHECK(outs2[0].holds);

  auto outs3 = check_claim(ClaimId::StarAlphaUpper, family(Family::Path, 5, 1), a2);
  CHECK_FALSE(outs3[0].applicable);
}

TEST_CASE("extremal mode: star maximizes, cycle minimizes") {
  auto star = verify_extremal(ClaimId::StarMaxTrees, 4, 6, 1.0);
  CHECK(star.violations.empty());
  CHECK(star.instances_tested == 3);

  auto cycle = verify_extremal(ClaimId::CycleMinUnicyclic, 3, 5, 1.0);
  CHECK(cycle.violations.empty());
  for (const auto& rec : cycle.records) {
    CHECK(rec.outcome.notes.find("winner=") != std::string::npos);
  }
}

TEST_CASE("extremal mode: path minimality fails beyond n=5 and is recorded") {
  // At n=4 and 5 the path support wins the minimum; from n=6 on, balanced
  // spiders and near-matching layouts undercut it. The checker records the
  // outcome either way.
  auto path = verify_extremal(ClaimId::PathMinTrees, 4, 7, 1.0);
  CHECK(path.instances_tested == 4);
  CHECK(path.holds_count == 2);
  REQUIRE(path.violations.size() == 2);
  CHECK(path.violations[0].instance == "n=6");
  CHECK(path.violations[1].instance == "n=7");
  for (const auto& rec : path.records) {
    CHECK(rec.outcome.notes.find("winner=") != std::string::npos);
  }
}

TEST_CASE("extremal mode: unicyclic maximum matches the cycle-with-star shape") {
  auto report = verify_extremal(ClaimId::UnicyclicMax, 3, 5, 1.0);
  CHECK(report.violations.empty());
  CHECK(report.instances_tested == 3);
}

TEST_CASE("extremal mode: tree sandwich holds for every uniform tree") {
  auto report = verify_extremal(ClaimId::TreeSandwich, 4, 8, 1.0);
  CHECK(report.violations.empty());
  // 2 + 3 + 6 + 11 + 23 trees, two variants each
  CHECK(report.instances_tested == 2 * (2 + 3 + 6 + 11 + 23));
}

TEST_CASE("extremal mode: complete support dominates at uniform p") {
  auto report = verify_extremal(ClaimId::KnMax, 4, 5, 1.0);
  CHECK(report.violations.empty());
  CHECK(report.instances_tested == 6);  // three p values per order
  ClaimOptions options;
  options.alpha = 2.0;
  auto report2 = verify_extremal(ClaimId::KnAlphaMax, 4, 4, 1.0, options);
  CHECK(report2.violations.empty());
}

TEST_CASE("extremal mode: disjoint edges minimize at fixed edge count") {
  auto report = verify_extremal(ClaimId::MatchingMin, 4, 6, 0.6);
  CHECK(report.violations.empty());
  CHECK(report.instances_tested >= 5);
}

TEST_CASE("margin sweeps") {
  std::vector<int> ns = {6, 8, 10};
  std::vector<double> ms = {0.5, 1.0};
  auto csv = margin_sweep_csv(ClaimId::LowerSqrt2MDelta, Family::Cycle, ns, ms);
  CHECK(csv.rfind("family,n,m_mu,claim,variant,lhs,rhs,margin,holds\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);  // header + 6 rows
  CHECK(csv.find(",0\n") == std::string::npos);          // every row holds

  auto handshake = margin_sweep_csv(ClaimId::Handshake, Family::Star, ns, ms);
  std::istringstream lines(handshake);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    auto pos = line.rfind(",1");
    CHECK(pos == line.size() - 2);
  }

  std::vector<int> wide = {6, 10, 20, 50};
  auto upper = margin_sweep_csv(ClaimId::UpperSqrt2MN1, Family::Star, wide,
                                std::vector<double>{1.0});
  CHECK(upper.find(",0\n") == std::string::npos);
}

TEST_CASE("claim csv shape and name round trip") {
  for (ClaimId id : all_claims()) {
    CHECK(claim_from_string(claim_name(id)) == id);
  }
  CHECK_THROWS_AS(claim_from_string("nope"), std::invalid_argument);

  auto report = verify_random(ClaimId::Handshake, 5, 3, 5, 5);
  auto csv = report.to_csv();
  CHECK(csv.rfind("claim,variant,instance,lhs,rhs,margin,holds,applicable\n",
                  0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
