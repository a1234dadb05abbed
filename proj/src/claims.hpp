#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "indices.hpp"
#include "search.hpp"

namespace fuzzytopo {

/// Every inequality or extremal statement the checker knows how to evaluate.
enum class ClaimId {
  Handshake,          // sum of fuzzy degrees = 2 m_mu (identity)
  UpperSqrt2MN1,      // SO <= sqrt(2) m (n-1)
  LowerSqrt2MDelta,   // SO >= sqrt(2) m_mu delta_mu
  PathMinConnected,   // SO(connected) >= SO(uniform path)
  PathMinTrees,       // SO(tree) >= SO(uniform path)
  StarMaxTrees,       // SO(tree) <= SO(uniform star)
  TreeSandwich,       // both path and star bounds at once
  KnMax,              // SO <= (sqrt2/2) n (n-1)^2 p_max^2
  KnAlphaMax,         // SO_alpha <= C(n,2) (sqrt2 (n-1) p_max^2)^alpha
  CycleMinUnicyclic,  // SO(unicyclic) >= SO(uniform cycle)
  UnicyclicMax,       // max unicyclic support is a cycle with a pendant star
  CompleteBounds,     // sqrt2 m^2/(n-1) <= SO <= (sqrt2/2) n (n-1)^2 p_max^2
  RandicLower,        // SO >= sqrt2 R delta (as printed) / delta^2 variant
  ZagrebUpper,        // SO <= sqrt2 (sqrt((2n-2) M1) m_mu + m (n-1)), regular
  ZagrebIrregular,    // SO <= 2 m_mu sum(mu (du^2+dv^2)) sqrt((2n-2) M1)
  NirmalaUpper,       // reduced: SO <= Delta_mu N / sqrt2; plus long form
  StarAlphaUpper,     // SO_alpha(star) <= printed star-alpha expression
  MatchingMin,        // k disjoint edges minimize SO at fixed (n, m_mu, k)
};

std::string claim_name(ClaimId id);
ClaimId claim_from_string(const std::string& name);
std::vector<ClaimId> all_claims();

/// Options shared by the checks: how to read the symbol "m" in the bounds
/// that mix it with m_mu, and the exponent used by the alpha-claims.
struct ClaimOptions {
  bool read_m_as_edge_count = false;  // default: m means the fuzzy size
  double alpha = 2.0;
};

/// Result of one claim evaluated on one instance. Claims with two printed
/// readings produce one outcome per `variant`. Margins are oriented so that
/// `holds` is margin >= -1e-9: rhs - lhs for upper bounds, lhs - rhs for
/// lower bounds, -|lhs - rhs| for identities.
struct CheckOutcome {
  std::string variant;  // "" for single-form claims
  bool applicable = true;
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  std::string notes;
};

std::vector<CheckOutcome> check_claim(ClaimId id, const FuzzyGraph& g,
                                      const ClaimOptions& options = {});

struct ClaimInstanceRecord {
  std::string instance;
  CheckOutcome outcome;
  std::string graph_text;  // serialized instance for violation replay
};

struct ClaimReport {
  ClaimId claim = ClaimId::Handshake;
  ClaimOptions options;
  int instances_tested = 0;  // applicable (instance, variant) pairs
  int holds_count = 0;
  int not_applicable = 0;
  double min_margin = 0.0;
  std::vector<ClaimInstanceRecord> records;     // every evaluated pair
  std::vector<ClaimInstanceRecord> violations;  // records that failed
  std::string notes;

  /// claim,variant,instance,lhs,rhs,margin,holds,applicable rows.
  std::string to_csv() const;
  /// Text block with aggregates and replayable counterexample graphs.
  std::string summary() const;
};

/// Checks the claim over a deterministic random-instance stream.
ClaimReport verify_random(ClaimId id, int samples, int n_min, int n_max,
                          std::uint64_t seed, const ClaimOptions& options = {});

/// Checks the claim on a fixed list of named instances.
ClaimReport verify_instances(
    ClaimId id, std::span<const std::pair<std::string, FuzzyGraph>> instances,
    const ClaimOptions& options = {});

/// Extremal-mode verification: runs the relevant support search per order n
/// and compares the winner with the claim's predicted extremal structure.
ClaimReport verify_extremal(ClaimId id, int n_min, int n_max, double m_mu,
                            const ClaimOptions& options = {},
                            const OptimizerConfig& optimizer = {});

/// One row per grid point (family built with the uniform scheme):
/// family,n,m_mu,claim,variant,lhs,rhs,margin,holds.
std::string margin_sweep_csv(ClaimId id, Family family, std::span<const int> ns,
                             std::span<const double> ms,
                             const ClaimOptions& options = {});

}  // namespace fuzzytopo
