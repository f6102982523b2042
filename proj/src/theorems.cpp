#include "ars/theorems.hpp"

#include <algorithm>

namespace ars {

namespace {

constexpr const char* kMethodNames[] = {"newman", "gnewman", "wnun", "cp", "exhaustive"};

// Reachability, joinability and the flags the join procedures consult.
struct JoinContext {
  const FiniteArs& ars;
  RelMatrix reach;
  RelMatrix joinable;
  SccView scc;
  std::vector<bool> mf;
  std::vector<bool> sm;
  std::vector<bool> wcr;

  explicit JoinContext(const FiniteArs& a)
      : ars(a), reach(closure(a, ClosureMode::ReflTransitive)), joinable(a.size()),
        scc(scc_view(a)) {
    const std::size_t n = a.size();
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = x; y < n; ++y) {
        bool j = false;
        for (ElementId d = 0; d < n && !j; ++d) j = reach.at(x, d) && reach.at(y, d);
        joinable.set(x, y, j);
        joinable.set(y, x, j);
      }
    }
    std::vector<bool> comp_sink(scc.component_count(), true);
    for (const auto& [from, to] : scc.condensation_edges) comp_sink[from] = false;
    mf.assign(n, false);
    for (ElementId x = 0; x < n; ++x) mf[x] = comp_sink[scc.component_of[x]];
    sm = mf;
    bool changed = true;
    while (changed) {
      changed = false;
      for (ElementId x = 0; x < n; ++x) {
        if (sm[x]) continue;
        bool all_in = true;
        for (ElementId y : ars.successors(x)) all_in = all_in && sm[y];
        if (all_in) {
          sm[x] = true;
          changed = true;
        }
      }
    }
    wcr.assign(n, true);
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId b : ars.successors(x)) {
        for (ElementId c : ars.successors(x)) {
          if (!joinable.at(b, c)) wcr[x] = false;
        }
      }
    }
  }

  bool sn_at(ElementId a, ElementId* cyclic_witness = nullptr) const {
    for (ElementId x = 0; x < ars.size(); ++x) {
      if (reach.at(a, x) && scc.cyclic[scc.component_of[x]]) {
        if (cyclic_witness) *cyclic_witness = x;
        return false;
      }
    }
    return true;
  }

  // First element (ascending) reachable from `a` where WCR fails, if any.
  std::optional<ElementId> wcr_offender_from(ElementId a) const {
    for (ElementId x = 0; x < ars.size(); ++x) {
      if (reach.at(a, x) && !wcr[x]) return x;
    }
    return std::nullopt;
  }

  std::optional<ElementId> wcr_offender_global() const {
    for (ElementId x = 0; x < ars.size(); ++x) {
      if (!wcr[x]) return x;
    }
    return std::nullopt;
  }

  Join wcr_witness(ElementId b1, ElementId c1) const {
    auto j = join_pair(ars, b1, c1);
    return *j;  // guarded by the WCR precondition check
  }
};

PathWitness tail_of(const PathWitness& p) {
  PathWitness out;
  out.nodes.assign(p.nodes.begin() + 1, p.nodes.end());
  return out;
}

// The shared recursion of Newman's lemma and its generalization.  `mf_base`
// enables the minimal-form base case.  Paths run apex →* b and apex →* c;
// fuel is a depth budget decremented along each branch.
Join join_recursion(const JoinContext& ctx, ElementId apex, const PathWitness& to_b,
                    const PathWitness& to_c, std::uint64_t fuel, bool mf_base) {
  if (to_b.length() == 0) {
    // b == apex: the right path already joins the peak at c.
    return Join{to_c.to(), to_c, PathWitness::trivial(to_c.to())};
  }
  if (to_c.length() == 0) {
    return Join{to_b.to(), PathWitness::trivial(to_b.to()), to_b};
  }
  if (mf_base && ctx.mf[apex]) {
    // Every reduct of a minimal form reduces back to it.
    auto back_left = path_between(ctx.ars, to_b.to(), apex);
    auto back_right = path_between(ctx.ars, to_c.to(), apex);
    return Join{apex, *back_left, *back_right};
  }
  if (fuel == 0) throw FuelExhaustedError("join recursion: fuel exhausted");
  ElementId b1 = to_b.nodes[1];
  ElementId c1 = to_c.nodes[1];
  Join local = ctx.wcr_witness(b1, c1);  // b1 →* d *← c1
  Join left = join_recursion(ctx, b1, tail_of(to_b), local.from_left, fuel - 1, mf_base);
  // left: b →* e *← d
  PathWitness c1_to_e = local.from_right.then(left.from_right);
  Join right = join_recursion(ctx, c1, tail_of(to_c), c1_to_e, fuel - 1, mf_base);
  // right: c →* f *← e
  return Join{right.target, left.from_left.then(right.from_right), right.from_left};
}

void require_valid_peak(const FiniteArs& ars, const Peak& p, const char* who) {
  if (!p.validates(ars)) {
    throw PreconditionFailedError(std::string(who) + ": peak does not validate");
  }
}

// First element (ascending) with no reachable normal form, if any.
std::optional<ElementId> wn_offender(const FiniteArs& ars, const RelMatrix& reach) {
  for (ElementId a = 0; a < ars.size(); ++a) {
    bool wn = false;
    for (ElementId b = 0; b < ars.size() && !wn; ++b) {
      wn = reach.at(a, b) && ars.successors(b).empty();
    }
    if (!wn) return a;
  }
  return std::nullopt;
}

std::optional<ElementId> un_red_offender(const FiniteArs& ars, const RelMatrix& reach) {
  for (ElementId a = 0; a < ars.size(); ++a) {
    std::size_t count = 0;
    for (ElementId b = 0; b < ars.size(); ++b) {
      if (reach.at(a, b) && ars.successors(b).empty()) ++count;
    }
    if (count > 1) return a;
  }
  return std::nullopt;
}

PathWitness nearest_normal_form(const FiniteArs& ars, ElementId a) {
  BfsForest forest = bfs_forest(ars, a);
  std::size_t best_dist = static_cast<std::size_t>(-1);
  ElementId best = a;
  for (ElementId x = 0; x < ars.size(); ++x) {
    if (!ars.successors(x).empty() || !forest.reaches(x)) continue;
    if (forest.dist[x] < best_dist) {
      best_dist = forest.dist[x];
      best = x;
    }
  }
  return forest.path_to(best);
}

// Compressed segment of the witness sequence from index i to index j >= i
// (reflexive pauses dropped so the result is a plain reduction).
PathWitness lasso_segment(const Lasso& l, std::size_t i, std::size_t j) {
  PathWitness out;
  out.nodes.push_back(lasso_denotation(l, i));
  for (std::size_t k = i + 1; k <= j; ++k) {
    ElementId next = lasso_denotation(l, k);
    if (next != out.nodes.back()) out.nodes.push_back(next);
  }
  return out;
}

}  // namespace

const char* join_method_name(JoinMethod m) {
  return kMethodNames[static_cast<std::size_t>(m)];
}

std::optional<JoinMethod> join_method_from_name(const std::string& name) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (name == kMethodNames[i]) return static_cast<JoinMethod>(i);
  }
  return std::nullopt;
}

Join newman_join(const FiniteArs& ars, const Peak& p, std::uint64_t fuel) {
  require_valid_peak(ars, p, "newman_join");
  JoinContext ctx(ars);
  ElementId cyclic = 0;
  if (!ctx.sn_at(p.apex, &cyclic)) {
    throw PreconditionFailedError("newman_join: SN fails at apex '" + ars.name(p.apex) +
                                  "': cyclic element '" + ars.name(cyclic) + "' is reachable");
  }
  if (auto bad = ctx.wcr_offender_from(p.apex)) {
    throw PreconditionFailedError("newman_join: WCR fails at element '" + ars.name(*bad) + "'");
  }
  return join_recursion(ctx, p.apex, p.left, p.right, fuel, /*mf_base=*/false);
}

Join generalized_newman_join(const FiniteArs& ars, const Peak& p, std::uint64_t fuel) {
  require_valid_peak(ars, p, "generalized_newman_join");
  JoinContext ctx(ars);
  if (auto bad = ctx.wcr_offender_global()) {
    throw PreconditionFailedError("generalized_newman_join: WCR fails at element '" +
                                  ars.name(*bad) + "'");
  }
  if (!ctx.sm[p.apex]) {
    throw PreconditionFailedError("generalized_newman_join: SM fails at apex '" +
                                  ars.name(p.apex) + "'");
  }
  return join_recursion(ctx, p.apex, p.left, p.right, fuel, /*mf_base=*/true);
}

Join wn_un_join(const FiniteArs& ars, const Peak& p) {
  require_valid_peak(ars, p, "wn_un_join");
  RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
  if (auto bad = wn_offender(ars, reach)) {
    throw PreconditionFailedError("wn_un_join: WN fails at element '" + ars.name(*bad) + "'");
  }
  if (auto bad = un_red_offender(ars, reach)) {
    throw PreconditionFailedError("wn_un_join: UNred fails at element '" + ars.name(*bad) +
                                  "'");
  }
  PathWitness left = nearest_normal_form(ars, p.left.to());
  PathWitness right = nearest_normal_form(ars, p.right.to());
  // Both are normal forms reachable from the apex; UN→ makes them coincide.
  return Join{left.to(), left, right};
}

Join cofinality_join(const FiniteArs& ars, const CofinalityWitness& w, const Peak& p) {
  require_valid_peak(ars, p, "cofinality_join");
  if (w.base != p.apex) {
    throw PreconditionFailedError("cofinality_join: witness base '" + ars.name(w.base) +
                                  "' does not match apex '" + ars.name(p.apex) + "'");
  }
  if (!w.validates(ars)) {
    throw PreconditionFailedError("cofinality_join: witness does not validate");
  }
  auto lookup = [&](ElementId y) {
    auto it = w.coverage.find(y);
    if (it == w.coverage.end()) {
      throw PreconditionFailedError("cofinality_join: coverage missing for '" + ars.name(y) +
                                    "'");
    }
    return it->second;
  };
  auto [i, left_path] = lookup(p.left.to());
  auto [j, right_path] = lookup(p.right.to());
  if (i <= j) {
    return Join{lasso_denotation(w.sequence, j),
                left_path.then(lasso_segment(w.sequence, i, j)), right_path};
  }
  return Join{lasso_denotation(w.sequence, i), left_path,
              right_path.then(lasso_segment(w.sequence, j, i))};
}

CofinalityWitness cr_to_cofinality(const FiniteArs& ars, ElementId a) {
  if (a >= ars.size()) throw IndexOutOfRangeError("cr_to_cofinality: element out of range");
  std::pair<ElementId, ElementId> bad{0, 0};
  auto witness = try_cofinality_witness(ars, a, &bad);
  if (!witness) {
    throw PreconditionFailedError("cr_to_cofinality: CR fails at '" + ars.name(a) +
                                  "': reducts '" + ars.name(bad.first) + "' and '" +
                                  ars.name(bad.second) + "' are not joinable");
  }
  return *witness;
}

ConversionDecision decide_conversion(const FiniteArs& ars, ElementId a, ElementId b) {
  if (a >= ars.size() || b >= ars.size()) {
    throw IndexOutOfRangeError("decide_conversion: element out of range");
  }
  SccView scc = scc_view(ars);
  for (std::uint32_t c = 0; c < scc.component_count(); ++c) {
    if (scc.cyclic[c]) {
      throw PreconditionFailedError("decide_conversion: SN fails, cycle through '" +
                                    ars.name(scc.components[c].front()) + "'");
    }
  }
  RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
  for (ElementId x = 0; x < ars.size(); ++x) {
    for (ElementId y = 0; y < ars.size(); ++y) {
      if (!reach.at(x, y)) continue;
      for (ElementId z = 0; z < ars.size(); ++z) {
        if (!reach.at(x, z)) continue;
        bool joinable = false;
        for (ElementId d = 0; d < ars.size() && !joinable; ++d) {
          joinable = reach.at(y, d) && reach.at(z, d);
        }
        if (!joinable) {
          throw PreconditionFailedError("decide_conversion: CR fails at '" + ars.name(x) +
                                        "': reducts '" + ars.name(y) + "' and '" +
                                        ars.name(z) + "' are not joinable");
        }
      }
    }
  }
  PathWitness left = nearest_normal_form(ars, a);
  PathWitness right = nearest_normal_form(ars, b);
  return ConversionDecision{left.to() == right.to(), left, right};
}

ElementId bound_from_wn_un(const FiniteArs& ars, const Lasso& l) {
  if (!l.validates(ars)) {
    throw PreconditionFailedError("bound_from_wn_un: lasso does not validate");
  }
  RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
  if (auto bad = wn_offender(ars, reach)) {
    throw PreconditionFailedError("bound_from_wn_un: WN fails at element '" + ars.name(*bad) +
                                  "'");
  }
  if (auto bad = un_red_offender(ars, reach)) {
    throw PreconditionFailedError("bound_from_wn_un: UNred fails at element '" +
                                  ars.name(*bad) + "'");
  }
  ElementId first = l.stem.empty() ? l.cycle.front() : l.stem.front();
  return nearest_normal_form(ars, first).to();
}

TheoremReport theorem_suite(const FiniteArs& ars) {
  SystemProfile sp = profile_system(ars);
  const GlobalProfile& g = sp.global;
  TheoremReport report;

  auto global_claim = [&](const std::string& label, bool premise, bool conclusion) {
    TheoremClaim c{label, !premise || conclusion, std::nullopt};
    if (!c.holds) c.counterexample = "premises hold globally but the conclusion fails";
    report.claims.push_back(std::move(c));
  };
  // Premise may mix global flags with a per-element one; conclusion is
  // evaluated at each element.
  auto pointwise_claim = [&](const std::string& label, bool global_premise,
                             auto&& element_premise, auto&& element_conclusion) {
    TheoremClaim c{label, true, std::nullopt};
    if (global_premise) {
      for (const auto& ep : sp.elements) {
        if (element_premise(ep) && !element_conclusion(ep)) {
          c.holds = false;
          c.counterexample = "fails at element '" + ars.name(ep.element) + "'";
          break;
        }
      }
    }
    report.claims.push_back(std::move(c));
  };

  global_claim("1.2.2 CR→NP", g.cr, g.np_conv);
  global_claim("1.2.2 NP→UN", g.np_conv, g.un_conv);
  global_claim("1.2.2 ii (WN ∧ UN= → CR)", g.wn && g.un_conv, g.cr);
  global_claim("1.2.2 ii+ (WN ∧ UN→ → CR)", g.wn && g.un_red, g.cr);
  global_claim("1.2.2 iii (subcommutative → CR)", g.subcommutative, g.cr);
  global_claim("Newman (SN ∧ WCR → CR)", g.sn && g.wcr, g.cr);
  pointwise_claim(
      "generalized Newman (WCR → SM ⊆ CR)", g.wcr,
      [](const ElementProfile& p) { return p.sm; },
      [](const ElementProfile& p) { return p.cr; });
  global_claim("1.2.3 i (WN ∧ UN= → BP)", g.wn && g.un_conv, g.bp);
  global_claim("1.2.3 i→ (WN ∧ UN→ → BP)", g.wn && g.un_red, g.bp);
  global_claim("1.2.3 iiSeq (WN ∧ UN= ∧ RP → SN)", g.wn && g.un_conv && g.rp, g.sn);
  global_claim("1.2.3 iii (WN ∧ WCR ∧ RP⁻ → SN)", g.wn && g.wcr && g.rp_minus, g.sn);
  global_claim("1.2.3 iv (CP → CR)", g.cp, g.cr);
  pointwise_claim(
      "1.2.3 iv pointwise (CP → CR)", true,
      [](const ElementProfile& p) { return p.cp; },
      [](const ElementProfile& p) { return p.cr; });
  pointwise_claim(
      "WN ∧ NP ∧ SM → SN", true,
      [](const ElementProfile& p) { return p.wn && p.np_red && p.sm; },
      [](const ElementProfile& p) { return p.sn; });
  pointwise_claim(
      "isWN ∧ SM → SN", g.wn, [](const ElementProfile& p) { return p.sm; },
      [](const ElementProfile& p) { return p.sn; });
  global_claim("isWN ∧ isSM → isSN", g.wn && g.sm, g.sn);
  return report;
}

}  // namespace ars
