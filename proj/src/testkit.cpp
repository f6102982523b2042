#include "ars/testkit.hpp"

#include <algorithm>

#include "ars/catalog.hpp"

namespace ars::testkit {

FiniteArs random_ars(std::uint64_t seed, std::size_t n, double p) {
  if (n < 1) throw ArsError("random_ars: n must be at least 1");
  if (!(p > 0.0) || p > 1.0) throw ArsError("random_ars: p must lie in (0,1]");
  XorShift64 rng(seed);
  std::vector<std::pair<ElementId, ElementId>> edges;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (rng.next_unit() < p) edges.emplace_back(a, b);
    }
  }
  return build_ars_indexed(n, edges);
}

namespace {

Selector el(Prop p) { return Selector{p, false}; }
Selector gl(Prop p) { return Selector{p, true}; }

std::vector<Claim> build_claims() {
  std::vector<Claim> c;
  auto pw_imp = [&](const std::string& label, std::vector<Selector> pre,
                    std::vector<Selector> post) {
    c.push_back({label, ClaimKind::Implication, ClaimScope::Pointwise, std::move(pre),
                 std::move(post), ""});
  };
  auto pw_eq = [&](const std::string& label, std::vector<Selector> lhs,
                   std::vector<Selector> rhs) {
    c.push_back({label, ClaimKind::Equivalence, ClaimScope::Pointwise, std::move(lhs),
                 std::move(rhs), ""});
  };
  auto gl_imp = [&](const std::string& label, std::vector<Selector> pre,
                    std::vector<Selector> post) {
    c.push_back({label, ClaimKind::Implication, ClaimScope::Global, std::move(pre),
                 std::move(post), ""});
  };
  auto gl_eq = [&](const std::string& label, std::vector<Selector> lhs,
                   std::vector<Selector> rhs) {
    c.push_back({label, ClaimKind::Equivalence, ClaimScope::Global, std::move(lhs),
                 std::move(rhs), ""});
  };
  auto non_imp = [&](const std::string& label, ClaimScope scope, std::vector<Selector> pre,
                     std::vector<Selector> post, const std::string& fixture) {
    c.push_back({label, ClaimKind::NonImplication, scope, std::move(pre), std::move(post),
                 fixture});
  };

  // Termination hierarchy edges.
  pw_imp("NF -> MF", {el(Prop::NF)}, {el(Prop::MF)});
  pw_imp("NF -> SN", {el(Prop::NF)}, {el(Prop::SN)});
  pw_imp("SN -> WN (dec & FB)", {el(Prop::SN)}, {el(Prop::WN)});
  pw_imp("SN -> SM", {el(Prop::SN)}, {el(Prop::SM)});
  pw_imp("MF -> SM", {el(Prop::MF)}, {el(Prop::SM)});
  pw_imp("SM -> WM", {el(Prop::SM)}, {el(Prop::WM)});
  pw_imp("WN -> WM", {el(Prop::WN)}, {el(Prop::WM)});
  // Confluence hierarchy edges.
  pw_imp("CR -> MP", {el(Prop::CR)}, {el(Prop::MP)});
  pw_imp("MP -> NPred", {el(Prop::MP)}, {el(Prop::NPred)});
  pw_imp("NPred -> UNred", {el(Prop::NPred)}, {el(Prop::UNred)});
  pw_imp("NPconv -> UNconv", {el(Prop::NPconv)}, {el(Prop::UNconv)});
  // Minimal-form / termination interplay.
  pw_imp("WN & NPred & SM -> SN", {el(Prop::WN), el(Prop::NPred), el(Prop::SM)},
         {el(Prop::SN)});
  pw_imp("global WCR & SM -> CR (generalized Newman)", {gl(Prop::WCR), el(Prop::SM)},
         {el(Prop::CR)});
  pw_imp("global WN & SM -> SN", {gl(Prop::WN), el(Prop::SM)}, {el(Prop::SN)});
  pw_eq("MF & WN <-> NF", {el(Prop::MF), el(Prop::WN)}, {el(Prop::NF)});
  pw_eq("MF & SN <-> NF", {el(Prop::MF), el(Prop::SN)}, {el(Prop::NF)});
  pw_eq("CP <-> CR (pointwise)", {el(Prop::CP)}, {el(Prop::CR)});
  pw_eq("SM <-> SMseq (pointwise)", {el(Prop::SM)}, {el(Prop::SMseq)});
  // Global theorems.
  gl_imp("CR -> NPconv (global)", {gl(Prop::CR)}, {gl(Prop::NPconv)});
  gl_imp("UNconv -> UNred (global)", {gl(Prop::UNconv)}, {gl(Prop::UNred)});
  gl_imp("subcommutative -> CR (global)", {gl(Prop::SubCommutative)}, {gl(Prop::CR)});
  gl_imp("SN & WCR -> CR (Newman)", {gl(Prop::SN), gl(Prop::WCR)}, {gl(Prop::CR)});
  gl_imp("WN & UNconv -> CR (global)", {gl(Prop::WN), gl(Prop::UNconv)}, {gl(Prop::CR)});
  gl_imp("WN & UNred -> CR (global)", {gl(Prop::WN), gl(Prop::UNred)}, {gl(Prop::CR)});
  gl_imp("WN & UNconv -> BP (global)", {gl(Prop::WN), gl(Prop::UNconv)}, {gl(Prop::BP)});
  gl_imp("WN & UNred -> BP (global)", {gl(Prop::WN), gl(Prop::UNred)}, {gl(Prop::BP)});
  gl_imp("WN & UNconv & RP -> SN (global)", {gl(Prop::WN), gl(Prop::UNconv), gl(Prop::RP)},
         {gl(Prop::SN)});
  gl_imp("WN & WCR & RPminus -> SN (global)",
         {gl(Prop::WN), gl(Prop::WCR), gl(Prop::RPminus)}, {gl(Prop::SN)});
  gl_imp("CP -> CR (global)", {gl(Prop::CP)}, {gl(Prop::CR)});
  gl_imp("Inc -> RP (global)", {gl(Prop::Inc)}, {gl(Prop::RP)});
  gl_imp("WN & SM -> SN (global)", {gl(Prop::WN), gl(Prop::SM)}, {gl(Prop::SN)});
  gl_eq("NPconv <-> NPred (global)", {gl(Prop::NPconv)}, {gl(Prop::NPred)});
  gl_eq("SMseq <-> RP & BP (global)", {gl(Prop::SMseq)}, {gl(Prop::RP), gl(Prop::BP)});
  gl_eq("RP <-> RPminus (global)", {gl(Prop::RP)}, {gl(Prop::RPminus)});
  // Non-implications, each refuted by its catalog fixture.
  non_imp("WM & UNred -/-> CR", ClaimScope::Global, {gl(Prop::WM), gl(Prop::UNred)},
          {gl(Prop::CR)}, "CE-2");
  non_imp("WM & NPred -/-> CR", ClaimScope::Global, {gl(Prop::WM), gl(Prop::NPred)},
          {gl(Prop::CR)}, "CE-3");
  non_imp("WCR & WN & UNred -/-> CR (pointwise)", ClaimScope::Pointwise,
          {el(Prop::WCR), el(Prop::WN), el(Prop::UNred)}, {el(Prop::CR)}, "CE-4");
  non_imp("UNred -/-> UNconv", ClaimScope::Global, {gl(Prop::UNred)}, {gl(Prop::UNconv)},
          "CE-5");
  non_imp("CR & SM -/-> SN", ClaimScope::Global, {gl(Prop::CR), gl(Prop::SM)},
          {gl(Prop::SN)}, "CE-8");
  non_imp("WCR & WN & UNred -/-> SN", ClaimScope::Global,
          {gl(Prop::WCR), gl(Prop::WN), gl(Prop::UNred)}, {gl(Prop::SN)}, "CE-11");
  non_imp("WN & UNred & CR -/-> SN (bounded)", ClaimScope::Global, {}, {}, "CE-6");
  return c;
}

bool selector_value(const Selector& s, const SystemProfile& profile,
                    std::optional<ElementId> element) {
  if (s.global || !element) {
    return is_element_prop(s.prop) ? profile.global_flag(s.prop)
                                   : profile.global.flag(s.prop);
  }
  return profile.element_flag(s.prop, *element);
}

bool conjunction(const std::vector<Selector>& selectors, const SystemProfile& profile,
                 std::optional<ElementId> element) {
  for (const auto& s : selectors) {
    if (!selector_value(s, profile, element)) return false;
  }
  return true;
}

}  // namespace

const std::vector<Claim>& claim_set() {
  static const std::vector<Claim> claims = build_claims();
  return claims;
}

std::optional<ClaimViolation> evaluate_claim(const Claim& claim,
                                             const SystemProfile& profile) {
  if (claim.kind == ClaimKind::NonImplication) return std::nullopt;
  if (claim.scope == ClaimScope::Global) {
    bool lhs = conjunction(claim.premises, profile, std::nullopt);
    bool rhs = conjunction(claim.conclusions, profile, std::nullopt);
    bool ok = claim.kind == ClaimKind::Implication ? (!lhs || rhs) : (lhs == rhs);
    if (!ok) return ClaimViolation{claim.label, std::nullopt};
    return std::nullopt;
  }
  for (ElementId a = 0; a < profile.elements.size(); ++a) {
    bool lhs = conjunction(claim.premises, profile, a);
    bool rhs = conjunction(claim.conclusions, profile, a);
    bool ok = claim.kind == ClaimKind::Implication ? (!lhs || rhs) : (lhs == rhs);
    if (!ok) return ClaimViolation{claim.label, a};
  }
  return std::nullopt;
}

namespace {

FiniteArs remove_element(const FiniteArs& ars, ElementId victim) {
  std::vector<std::string> names;
  for (ElementId a = 0; a < ars.size(); ++a) {
    if (a != victim) names.push_back(ars.name(a));
  }
  std::vector<std::pair<ElementId, ElementId>> steps;
  for (const auto& [a, b] : ars.steps()) {
    if (a == victim || b == victim) continue;
    steps.emplace_back(a > victim ? a - 1 : a, b > victim ? b - 1 : b);
  }
  return build_ars_indexed(names.size(), steps, names);
}

FiniteArs remove_step(const FiniteArs& ars, std::size_t step_index) {
  auto steps = ars.steps();
  steps.erase(steps.begin() + step_index);
  return build_ars_indexed(ars.size(), steps, ars.names());
}

// Greedy single-pass shrinking: delete elements, then edges, keeping every
// deletion that preserves the violation.
FiniteArs shrink_violation(const Claim& claim, FiniteArs instance) {
  auto violates = [&](const FiniteArs& candidate) {
    return evaluate_claim(claim, profile_system(candidate)).has_value();
  };
  ElementId position = 0;
  while (instance.size() > 1 && position < instance.size()) {
    FiniteArs candidate = remove_element(instance, position);
    if (violates(candidate)) {
      instance = std::move(candidate);
    } else {
      ++position;
    }
  }
  std::size_t edge = 0;
  while (edge < instance.step_count()) {
    FiniteArs candidate = remove_step(instance, edge);
    if (violates(candidate)) {
      instance = std::move(candidate);
    } else {
      ++edge;
    }
  }
  return instance;
}

// (element count, edge count, edge list) ordering for deterministic
// counterexample selection.
bool lexicographically_before(const FiniteArs& a, const FiniteArs& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ea = a.steps();
  auto eb = b.steps();
  if (ea.size() != eb.size()) return ea.size() < eb.size();
  return ea < eb;
}

void check_non_implication(const Claim& claim, FuzzReport& report) {
  const auto* fixture = catalog::find_fixture(claim.witness_fixture);
  if (!fixture) {
    report.non_implication_failures.push_back(claim.label + ": fixture '" +
                                              claim.witness_fixture + "' not found");
    return;
  }
  if (!fixture->is_finite()) {
    // Bounded-evidence confirmation: the chain refutes SN at the bound while
    // normalization, unique-normal-form and peak-join evidence support the
    // premises.
    auto outcome = catalog::check_evidence(fixture->enumerable());
    bool confirmed = outcome.chain_ok && outcome.normalization_ok && outcome.peaks_join &&
                     outcome.normal_forms_within_bound == 1;
    if (!confirmed) {
      report.non_implication_failures.push_back(
          claim.label + ": bounded evidence on '" + claim.witness_fixture +
          "' does not refute the implication");
    }
    return;
  }
  SystemProfile profile = profile_system(fixture->finite().ars);
  bool confirmed = false;
  if (claim.scope == ClaimScope::Global) {
    confirmed = conjunction(claim.premises, profile, std::nullopt) &&
                !conjunction(claim.conclusions, profile, std::nullopt);
  } else {
    for (ElementId a = 0; a < profile.elements.size() && !confirmed; ++a) {
      confirmed = conjunction(claim.premises, profile, a) &&
                  !conjunction(claim.conclusions, profile, a);
    }
  }
  if (!confirmed) {
    report.non_implication_failures.push_back(claim.label + ": fixture '" +
                                              claim.witness_fixture +
                                              "' does not refute the implication");
  }
}

}  // namespace

std::size_t FuzzReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& [label, count] : violation_counts) total += count;
  return total;
}

FuzzReport fuzz_claims(const std::vector<Claim>& claims, const GenConfig& config) {
  if (config.count < 1 || config.max_size < 1 || config.densities.empty()) {
    throw ArsError("fuzz_claims: count, max_size and densities must be nonempty/positive");
  }
  FuzzReport report;
  XorShift64 rng(config.seed);
  for (std::size_t i = 0; i < config.count; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(rng.next_below(config.max_size));
    double p = config.densities[i % config.densities.size()];
    FiniteArs instance = random_ars(rng.next(), n, p);
    SystemProfile profile = profile_system(instance);
    ++report.instances_run;
    for (const auto& claim : claims) {
      if (claim.kind == ClaimKind::NonImplication) continue;
      if (auto violation = evaluate_claim(claim, profile)) {
        ++report.violation_counts[claim.label];
        FiniteArs shrunk = shrink_violation(claim, instance);
        auto it = report.shrunk.find(claim.label);
        if (it == report.shrunk.end() || lexicographically_before(shrunk, it->second)) {
          report.shrunk.insert_or_assign(claim.label, std::move(shrunk));
        }
      }
    }
  }
  for (const auto& claim : claims) {
    if (claim.kind == ClaimKind::NonImplication) check_non_implication(claim, report);
  }
  return report;
}

FuzzReport fuzz_implications(const GenConfig& config) {
  return fuzz_claims(claim_set(), config);
}

namespace {

constexpr std::size_t kOracleCapacity = 10;

// Definitional evaluation: naive reachability by path extension, explicit
// simple-path and simple-cycle enumeration, no condensation shortcuts.
struct Oracle {
  const FiniteArs& ars;
  std::size_t n;
  std::vector<bool> reach_;  // n*n
  std::vector<bool> conv_;
  std::vector<bool> nf_;
  std::vector<bool> mf_;

  bool reach(ElementId a, ElementId b) const { return reach_[a * n + b]; }
  bool conv(ElementId a, ElementId b) const { return conv_[a * n + b]; }

  explicit Oracle(const FiniteArs& a) : ars(a), n(a.size()) {
    reach_.assign(n * n, false);
    for (ElementId x = 0; x < n; ++x) reach_[x * n + x] = true;
    for (const auto& [x, y] : ars.steps()) reach_[x * n + y] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = 0; y < n; ++y) {
          if (!reach_[x * n + y]) continue;
          for (ElementId z : ars.successors(y)) {
            if (!reach_[x * n + z]) {
              reach_[x * n + z] = true;
              changed = true;
            }
          }
        }
      }
    }
    conv_.assign(n * n, false);
    for (ElementId x = 0; x < n; ++x) conv_[x * n + x] = true;
    for (const auto& [x, y] : ars.steps()) {
      conv_[x * n + y] = true;
      conv_[y * n + x] = true;
    }
    changed = true;
    while (changed) {
      changed = false;
      for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = 0; y < n; ++y) {
          if (!conv_[x * n + y]) continue;
          for (ElementId z = 0; z < n; ++z) {
            if (conv_[y * n + z] && !conv_[x * n + z]) {
              conv_[x * n + z] = true;
              changed = true;
            }
          }
        }
      }
    }
    nf_.assign(n, false);
    for (ElementId x = 0; x < n; ++x) nf_[x] = ars.successors(x).empty();
    mf_.assign(n, false);
    for (ElementId x = 0; x < n; ++x) {
      bool mf = true;
      for (ElementId y = 0; y < n; ++y) {
        if (reach(x, y) && !reach(y, x)) mf = false;
      }
      mf_[x] = mf;
    }
  }

  bool joinable(ElementId b, ElementId c) const {
    for (ElementId d = 0; d < n; ++d) {
      if (reach(b, d) && reach(c, d)) return true;
    }
    return false;
  }

  // Reachable set from `from` staying inside `allowed`.
  std::vector<bool> reachable_within(const std::vector<bool>& allowed, ElementId from) const {
    std::vector<bool> seen(n, false);
    if (!allowed[from]) return seen;
    std::vector<ElementId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      ElementId v = stack.back();
      stack.pop_back();
      for (ElementId w : ars.successors(v)) {
        if (allowed[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

  // Some simple cycle through x inside `allowed`.
  bool cycle_through(const std::vector<bool>& allowed, ElementId x) const {
    for (ElementId w : ars.successors(x)) {
      if (!allowed[w]) continue;
      auto back = reachable_within(allowed, w);
      if (back[x]) return true;
    }
    return false;
  }

  // Every simple cycle, canonicalized by its minimal element.
  std::vector<std::vector<ElementId>> simple_cycles() const {
    std::vector<std::vector<ElementId>> cycles;
    std::vector<ElementId> path;
    std::vector<bool> on_path(n, false);
    std::function<void(ElementId, ElementId)> dfs = [&](ElementId origin, ElementId v) {
      for (ElementId w : ars.successors(v)) {
        if (w == origin) {
          cycles.push_back(path);
        } else if (w > origin && !on_path[w]) {
          path.push_back(w);
          on_path[w] = true;
          dfs(origin, w);
          path.pop_back();
          on_path[w] = false;
        }
      }
    };
    for (ElementId origin = 0; origin < n; ++origin) {
      path = {origin};
      on_path.assign(n, false);
      on_path[origin] = true;
      dfs(origin, origin);
    }
    return cycles;
  }

  bool sn_at(ElementId a) const {
    std::vector<bool> everything(n, true);
    auto reachable = reachable_within(everything, a);
    for (ElementId x = 0; x < n; ++x) {
      if (reachable[x] && cycle_through(everything, x)) return false;
    }
    return true;
  }

  // Shared by the SM and SMseq oracles: no minimal-form-avoiding infinite
  // behavior, i.e. no simple cycle reachable from a through non-MF elements.
  bool sm_at(ElementId a) const {
    if (mf_[a]) return true;
    std::vector<bool> non_mf(n, false);
    for (ElementId x = 0; x < n; ++x) non_mf[x] = !mf_[x];
    auto reachable = reachable_within(non_mf, a);
    for (ElementId x = 0; x < n; ++x) {
      if (reachable[x] && cycle_through(non_mf, x)) return false;
    }
    return true;
  }

  // A simple reduction path from a whose elements absorb every reduct of a
  // (the constant tail over the reflexive closure finishes the lasso).
  bool cp_at(ElementId a) const {
    std::vector<ElementId> reducts;
    for (ElementId b = 0; b < n; ++b) {
      if (reach(a, b)) reducts.push_back(b);
    }
    std::vector<ElementId> path{a};
    std::vector<bool> on_path(n, false);
    on_path[a] = true;
    std::function<bool()> dfs = [&]() -> bool {
      bool covered = true;
      for (ElementId b : reducts) {
        bool hit = false;
        for (ElementId y : path) {
          if (reach(b, y)) {
            hit = true;
            break;
          }
        }
        if (!hit) {
          covered = false;
          break;
        }
      }
      if (covered) return true;
      for (ElementId w : ars.successors(path.back())) {
        if (on_path[w]) continue;
        path.push_back(w);
        on_path[w] = true;
        if (dfs()) return true;
        path.pop_back();
        on_path[w] = false;
      }
      return false;
    };
    return dfs();
  }

  bool element_prop(Prop prop, ElementId a) const {
    switch (prop) {
      case Prop::NF: return nf_[a];
      case Prop::WN: {
        for (ElementId b = 0; b < n; ++b) {
          if (reach(a, b) && nf_[b]) return true;
        }
        return false;
      }
      case Prop::SN: return sn_at(a);
      case Prop::MF: return mf_[a];
      case Prop::WM: {
        for (ElementId b = 0; b < n; ++b) {
          if (reach(a, b) && mf_[b]) return true;
        }
        return false;
      }
      case Prop::SM:
      case Prop::SMseq: return sm_at(a);
      case Prop::WCR: {
        for (ElementId b : ars.successors(a)) {
          for (ElementId c : ars.successors(a)) {
            if (!joinable(b, c)) return false;
          }
        }
        return true;
      }
      case Prop::CR: {
        for (ElementId b = 0; b < n; ++b) {
          if (!reach(a, b)) continue;
          for (ElementId c = 0; c < n; ++c) {
            if (reach(a, c) && !joinable(b, c)) return false;
          }
        }
        return true;
      }
      case Prop::SubCommutative: {
        for (ElementId b : ars.successors(a)) {
          for (ElementId c : ars.successors(a)) {
            bool one = false;
            for (ElementId d = 0; d < n && !one; ++d) {
              one = (b == d || ars.has_step(b, d)) && (c == d || ars.has_step(c, d));
            }
            if (!one) return false;
          }
        }
        return true;
      }
      case Prop::NPconv: {
        for (ElementId b = 0; b < n; ++b) {
          if (nf_[b] && conv(a, b) && !reach(a, b)) return false;
        }
        return true;
      }
      case Prop::NPred: {
        for (ElementId b = 0; b < n; ++b) {
          if (!reach(a, b) || !nf_[b]) continue;
          for (ElementId c = 0; c < n; ++c) {
            if (reach(a, c) && !reach(c, b)) return false;
          }
        }
        return true;
      }
      case Prop::UNconv: {
        if (!nf_[a]) return true;
        for (ElementId b = 0; b < n; ++b) {
          if (nf_[b] && conv(a, b) && b != a) return false;
        }
        return true;
      }
      case Prop::UNred: {
        std::size_t count = 0;
        for (ElementId b = 0; b < n; ++b) {
          if (reach(a, b) && nf_[b]) ++count;
        }
        return count <= 1;
      }
      case Prop::MP: {
        for (ElementId b = 0; b < n; ++b) {
          if (!reach(a, b) || !mf_[b]) continue;
          for (ElementId c = 0; c < n; ++c) {
            if (reach(a, c) && !reach(c, b)) return false;
          }
        }
        return true;
      }
      case Prop::CP: return cp_at(a);
      default:
        throw ArsError(std::string("brute_force_oracle: not an element property: ") +
                       prop_name(prop));
    }
  }

  bool global_prop(Prop prop) const {
    switch (prop) {
      case Prop::BP: {
        // Every simple cycle, read as a lasso, admits a bound.
        for (const auto& cycle : simple_cycles()) {
          bool bounded = false;
          for (ElementId b = 0; b < n && !bounded; ++b) {
            bool all = true;
            for (ElementId x : cycle) all = all && reach(x, b);
            bounded = all;
          }
          if (!bounded) return false;
        }
        return true;
      }
      case Prop::RP: {
        for (const auto& cycle : simple_cycles()) {
          bool hits_mf = false;
          for (ElementId x : cycle) hits_mf = hits_mf || mf_[x];
          if (!hits_mf) return false;
        }
        return true;
      }
      case Prop::RPminus: {
        for (const auto& cycle : simple_cycles()) {
          for (ElementId b = 0; b < n; ++b) {
            if (!reach(cycle.front(), b)) continue;
            bool back = false;
            for (ElementId x : cycle) back = back || reach(b, x);
            if (!back) return false;
          }
        }
        return true;
      }
      case Prop::Inc: return simple_cycles().empty();
      case Prop::FB:
      case Prop::Dec: return true;
      default: {
        for (ElementId a = 0; a < n; ++a) {
          if (!element_prop(prop, a)) return false;
        }
        return true;
      }
    }
  }
};

}  // namespace

bool brute_force_oracle(const FiniteArs& ars, Prop prop, std::optional<ElementId> element) {
  if (ars.size() > kOracleCapacity) {
    throw CapacityExceededError("brute_force_oracle: universe of size " +
                                std::to_string(ars.size()) + " exceeds the cap of " +
                                std::to_string(kOracleCapacity));
  }
  Oracle oracle(ars);
  if (element) {
    if (*element >= ars.size()) {
      throw IndexOutOfRangeError("brute_force_oracle: element out of range");
    }
    if (!is_element_prop(prop)) {
      throw ArsError(std::string("brute_force_oracle: ") + prop_name(prop) +
                     " has no per-element reading");
    }
    return oracle.element_prop(prop, *element);
  }
  return oracle.global_prop(prop);
}

std::optional<Lasso> sample_lasso(const FiniteArs& ars, std::uint64_t seed) {
  XorShift64 rng(seed);
  const std::size_t attempts = 2 * ars.size() + 4;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    ElementId start = static_cast<ElementId>(rng.next_below(ars.size()));
    std::vector<ElementId> walk{start};
    std::vector<std::size_t> position(ars.size(), static_cast<std::size_t>(-1));
    position[start] = 0;
    for (std::size_t step = 0; step <= 2 * ars.size() + 2; ++step) {
      const auto& succ = ars.successors(walk.back());
      if (succ.empty()) break;
      ElementId next = succ[rng.next_below(succ.size())];
      if (position[next] != static_cast<std::size_t>(-1)) {
        std::size_t j = position[next];
        Lasso l;
        l.stem.assign(walk.begin(), walk.begin() + j);
        l.cycle.assign(walk.begin() + j, walk.end());
        return l;
      }
      position[next] = walk.size();
      walk.push_back(next);
    }
  }
  return std::nullopt;
}

}  // namespace ars::testkit
