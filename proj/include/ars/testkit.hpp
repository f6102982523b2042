#ifndef ARS_TESTKIT_HPP_
#define ARS_TESTKIT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ars/core.hpp"
#include "ars/properties.hpp"

namespace ars::testkit {

// Pinned PRNG: Marsaglia xorshift64 with the (13, 7, 17) triple.  The
// algorithm identifier is part of the artifact contract so goldens are
// portable across implementations.  Seed 0 maps to a fixed nonzero state.
class XorShift64 {
 public:
  explicit XorShift64(std::uint64_t seed)
      : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Independent per-pair edge sampling: each ordered pair (self-loops included)
// is kept with probability p, pairs visited in row-major order.  Identical
// inputs give identical systems on every platform.
FiniteArs random_ars(std::uint64_t seed, std::size_t n, double p);

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_size = 7;
  std::vector<double> densities = {0.1, 0.2, 0.35, 0.5};
};

enum class ClaimKind { Implication, Equivalence, NonImplication };
enum class ClaimScope { Pointwise, Global };

// One property reference inside a claim.  In a pointwise claim a selector may
// still quantify globally (e.g. the generalized Newman premise "WCR holds
// everywhere").  In a global claim every selector is read globally.
struct Selector {
  Prop prop;
  bool global = false;
};

struct Claim {
  std::string label;
  ClaimKind kind;
  ClaimScope scope;
  std::vector<Selector> premises;
  std::vector<Selector> conclusions;
  // NonImplication claims name the catalog fixture that refutes the
  // implication; they are checked once against it, never against random
  // instances.
  std::string witness_fixture;
};

// The frozen claim list: the termination/confluence hierarchy edges, the
// classical theorem implications, the minimal-form equivalences, and the
// non-implications with their counterexample witnesses.
const std::vector<Claim>& claim_set();

// nullopt = claim satisfied on this instance; otherwise the element at which
// it fails (or element 0 for a global violation).
struct ClaimViolation {
  std::string claim;
  std::optional<ElementId> element;
};

std::optional<ClaimViolation> evaluate_claim(const Claim& claim, const SystemProfile& profile);

struct FuzzReport {
  std::size_t instances_run = 0;
  std::map<std::string, std::size_t> violation_counts;
  // Minimal violating instance per claim (element count, then edge count,
  // then edge list): greedy single-pass shrinking.
  std::map<std::string, FiniteArs> shrunk;
  std::vector<std::string> non_implication_failures;

  std::size_t total_violations() const;
  bool clean() const { return total_violations() == 0 && non_implication_failures.empty(); }
};

// Evaluates every claim against `count` seeded instances; implications and
// equivalences must hold everywhere, non-implications are confirmed against
// their named fixtures.  Violations are shrunk by greedy element/edge
// deletion preserving the violation.
FuzzReport fuzz_implications(const GenConfig& config);

// Same harness with an explicit claim list (used by the shrinker self-test).
FuzzReport fuzz_claims(const std::vector<Claim>& claims, const GenConfig& config);

// Decides the selected property by exhaustive path / lasso / predicate
// enumeration with no SCC shortcuts; cross-validates every
// characterization-based decider.  Universe size is capped at 10.
// Omit `element` for the global reading.
bool brute_force_oracle(const FiniteArs& ars, Prop prop,
                        std::optional<ElementId> element = std::nullopt);

// A random walk folded into stem + cycle at its first revisit; nullopt when
// the sampled walks die at normal forms (e.g. on acyclic systems).
std::optional<Lasso> sample_lasso(const FiniteArs& ars, std::uint64_t seed);

}  // namespace ars::testkit

#endif  // ARS_TESTKIT_HPP_
