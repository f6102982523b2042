#ifndef ARS_THEOREMS_HPP_
#define ARS_THEOREMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ars/core.hpp"
#include "ars/properties.hpp"

namespace ars {

enum class JoinMethod { Newman, GeneralizedNewman, WnUn, Cofinality, Exhaustive };

const char* join_method_name(JoinMethod m);
std::optional<JoinMethod> join_method_from_name(const std::string& name);

// Newman's lemma made executable: joins any peak whose apex is SN in a
// locally confluent reachable region, by the well-founded recursion of the
// constructive proof (split first steps, join with the local WCR witness,
// recurse on the one-step reducts).  Preconditions are checked eagerly and
// failures name the offending element.  `fuel` bounds the recursion depth;
// with the preconditions intact it is never exhausted for
// fuel >= |reach(apex)|².
Join newman_join(const FiniteArs& ars, const Peak& p, std::uint64_t fuel);

// The generalized form: global WCR plus SM at the apex.  Minimal-form apexes
// join both sides back at the apex; otherwise as newman_join.
Join generalized_newman_join(const FiniteArs& ars, const Peak& p, std::uint64_t fuel);

// Joins a peak in a globally WN ∧ UN→ system by normalizing both sides; the
// unique-normal-form property forces the two normal forms to coincide.
Join wn_un_join(const FiniteArs& ars, const Peak& p);

// Joins a peak using a cofinality witness for its apex: both endpoints are
// covered at some index, and the sequence carries the smaller index to the
// larger one.
Join cofinality_join(const FiniteArs& ars, const CofinalityWitness& w, const Peak& p);

// The countable converse of Theorem 1.2.3 iv: builds a cofinality witness
// for a CR element by iteratively joining a running endpoint with each
// reduct in index order.
CofinalityWitness cr_to_cofinality(const FiniteArs& ars, ElementId a);

struct ConversionDecision {
  bool convertible;
  PathWitness left_path;   // normalization of the first element
  PathWitness right_path;  // normalization of the second element
};

// Decides a ≈ b on a complete (SN ∧ CR) system by comparing normal forms.
ConversionDecision decide_conversion(const FiniteArs& ars, ElementId a, ElementId b);

// Theorem 1.2.3 i: in a WN ∧ UN→ system the unique normal form of a lasso's
// first element bounds the lasso.
ElementId bound_from_wn_un(const FiniteArs& ars, const Lasso& l);

struct TheoremClaim {
  std::string label;
  bool holds;
  std::optional<std::string> counterexample;  // present iff !holds
};

struct TheoremReport {
  std::vector<TheoremClaim> claims;

  bool all_hold() const {
    for (const auto& c : claims) {
      if (!c.holds) return false;
    }
    return true;
  }
};

// Evaluates the classical confluence/termination theorems, Newman's lemma,
// its minimal-form generalization, and the SM/WN/SN chains as material
// implications on this instance.  These are theorems, so every verdict is
// expected to hold; a false verdict is a decider bug and carries evidence.
TheoremReport theorem_suite(const FiniteArs& ars);

// ---------------------------------------------------------------------------
// Enumerable-system algorithms.

template <class Key>
struct SnNormalization {
  Key normal_form;
  std::vector<Key> path;  // start, ..., normal_form
};

// Depth-first descent choosing the first enumerated successor until the
// enumeration is empty.  The caller asserts SN of `start`; exhausted fuel
// signals either ¬SN or an insufficient budget (fuel >= |reach(start)|+1
// suffices for SN starts).
template <class Key, class Hash>
SnNormalization<Key> normalize_sn(const EnumerableArs<Key, Hash>& system, const Key& start,
                                  std::uint64_t fuel) {
  SnNormalization<Key> out{start, {start}};
  Key current = start;
  for (;;) {
    std::vector<Key> succ = system.successors(current);
    if (succ.empty()) {
      out.normal_form = current;
      return out;
    }
    if (fuel == 0) {
      throw FuelExhaustedError("normalize_sn: fuel exhausted after " +
                               std::to_string(out.path.size() - 1) + " steps");
    }
    --fuel;
    current = succ.front();
    out.path.push_back(current);
  }
}

template <class Key>
struct BoundedJoin {
  Key target;
  std::vector<Key> left_path;
  std::vector<Key> right_path;
};

// Breadth-first join search up to `depth` steps on each side.  Test-scale
// machinery for enumerable systems where joinability is not decidable.
template <class Key, class Hash>
std::optional<BoundedJoin<Key>> bounded_join_search(const EnumerableArs<Key, Hash>& system,
                                                    const Key& left, const Key& right,
                                                    std::size_t depth) {
  using Map = std::unordered_map<Key, Key, Hash>;
  auto explore = [&](const Key& origin, Map& parent, std::vector<Key>& order) {
    parent.emplace(origin, origin);
    order.push_back(origin);
    std::size_t layer_begin = 0;
    for (std::size_t d = 0; d < depth; ++d) {
      std::size_t layer_end = order.size();
      for (std::size_t i = layer_begin; i < layer_end; ++i) {
        Key v = order[i];
        for (const Key& w : system.successors(v)) {
          if (parent.emplace(w, v).second) order.push_back(w);
        }
      }
      layer_begin = layer_end;
    }
  };
  auto path_to = [](const Map& parent, const Key& origin, Key v) {
    std::vector<Key> nodes{v};
    while (!(nodes.back() == origin)) {
      v = parent.at(v);
      nodes.push_back(v);
    }
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
  };
  Map left_parent, right_parent;
  std::vector<Key> left_order, right_order;
  explore(left, left_parent, left_order);
  explore(right, right_parent, right_order);
  for (const Key& v : left_order) {
    if (right_parent.count(v)) {
      return BoundedJoin<Key>{v, path_to(left_parent, left, v),
                              path_to(right_parent, right, v)};
    }
  }
  return std::nullopt;
}

}  // namespace ars

#endif  // ARS_THEOREMS_HPP_
