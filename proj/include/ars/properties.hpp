#ifndef ARS_PROPERTIES_HPP_
#define ARS_PROPERTIES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ars/core.hpp"

namespace ars {

// The property taxonomy.  NF..CP are per-element predicates (their global
// form is the universal closure); BP..Dec are global-only.
enum class Prop {
  NF,
  WN,
  SN,
  MF,
  WM,
  SM,
  SMseq,
  WCR,
  CR,
  SubCommutative,
  NPconv,
  NPred,
  UNconv,
  UNred,
  MP,
  CP,
  BP,
  RP,
  RPminus,
  Inc,
  FB,
  Dec,
};

constexpr std::size_t kElementPropCount = 16;
constexpr std::size_t kPropCount = 22;

const char* prop_name(Prop p);
std::optional<Prop> prop_from_name(const std::string& name);
bool is_element_prop(Prop p);
const std::vector<Prop>& element_props();
const std::vector<Prop>& all_props();

// Two reductions diverging from a common apex.
struct Peak {
  ElementId apex;
  PathWitness left;
  PathWitness right;

  bool validates(const FiniteArs& ars) const {
    return left.validates(ars) && right.validates(ars) && left.from() == apex &&
           right.from() == apex;
  }
};

// Two reductions converging on a common target.
struct Join {
  ElementId target;
  PathWitness from_left;
  PathWitness from_right;

  bool validates(const FiniteArs& ars) const {
    return from_left.validates(ars) && from_right.validates(ars) &&
           from_left.to() == target && from_right.to() == target;
  }
  // The join closes the given peak: endpoints match up.
  bool closes(const Peak& p) const {
    return from_left.from() == p.left.to() && from_right.from() == p.right.to();
  }
};

// A cofinal reduction sequence from `base`, presented as a lasso over the
// reflexive closure (consecutive elements equal or one step apart), together
// with a proof that every reduct of `base` reaches some element of it.
struct CofinalityWitness {
  ElementId base;
  Lasso sequence;
  // reduct -> (index into the sequence, reduction reduct →* s(index))
  std::map<ElementId, std::pair<std::size_t, PathWitness>> coverage;

  bool validates(const FiniteArs& ars) const;
};

struct ElementProfile {
  ElementId element = 0;
  bool nf = false, wn = false, sn = false, mf = false, wm = false, sm = false,
       sm_seq = false, wcr = false, cr = false, subcommutative = false,
       np_conv = false, np_red = false, un_conv = false, un_red = false,
       mp = false, cp = false;
  std::optional<PathWitness> wn_witness;          // a reduction to a normal form
  std::optional<CofinalityWitness> cp_witness;

  bool flag(Prop p) const;
};

struct GlobalProfile {
  // Universal closures of the element predicates.
  bool nf = false, wn = false, sn = false, mf = false, wm = false, sm = false,
       sm_seq = false, wcr = false, cr = false, subcommutative = false,
       np_conv = false, np_red = false, un_conv = false, un_red = false,
       mp = false, cp = false;
  // Global-only properties.
  bool bp = false, rp = false, rp_minus = false, inc = false, fb = false, dec = false;
  // Topological numbering |-| with |a| < |b| for every step a → b; present
  // iff inc holds.
  std::optional<std::vector<std::uint32_t>> inc_witness;

  bool flag(Prop p) const;
};

struct SystemProfile {
  std::vector<ElementProfile> elements;
  GlobalProfile global;

  bool element_flag(Prop p, ElementId a) const { return elements[a].flag(p); }
  bool global_flag(Prop p) const { return global.flag(p); }
};

// Every decider for one element.  Throws IndexOutOfRangeError; CP's
// condensation path search throws CapacityExceededError beyond 14 reachable
// components.
ElementProfile element_profile(const FiniteArs& ars, ElementId a);

// All element profiles plus the global profile in one pass over the shared
// analysis (reachability, conversion, SCC data are computed once).
SystemProfile profile_system(const FiniteArs& ars);

GlobalProfile global_profile(const FiniteArs& ars);

// True iff every element occurring in the lasso reaches b.  Throws
// MalformedLassoError if the lasso does not validate.
bool check_bound(const FiniteArs& ars, const Lasso& l, ElementId b);

// A valid Join for the pair, or nullopt if not joinable.  Equal endpoints
// join trivially at themselves; otherwise the target has minimal index among
// joinable targets and both paths are breadth-first shortest.
std::optional<Join> join_pair(const FiniteArs& ars, ElementId b, ElementId c);

// Bound extraction justifying BP on finite systems: any cycle element of a
// validating lasso bounds it (lowest index returned; check_bound confirms).
ElementId extract_lasso_bound(const FiniteArs& ars, const Lasso& l);

// First index whose denotation is a minimal form, if one occurs within
// stem + cycle (the RP index for this lasso).
std::optional<std::size_t> first_minimal_form_index(const FiniteArs& ars, const Lasso& l);

// Iterative-join construction of a cofinality witness for `a`.  Succeeds iff
// CR holds at `a`; on failure returns nullopt and stores the first
// non-joinable pair of reducts in *bad_pair if given.
std::optional<CofinalityWitness> try_cofinality_witness(
    const FiniteArs& ars, ElementId a,
    std::pair<ElementId, ElementId>* bad_pair = nullptr);

// Hard cap on the condensation path search behind the CP decider.
constexpr std::size_t kCpComponentLimit = 14;

}  // namespace ars

#endif  // ARS_PROPERTIES_HPP_
