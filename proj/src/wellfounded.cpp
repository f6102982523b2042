#include "ars/wellfounded.hpp"

#include <algorithm>

namespace ars::wf {

namespace {

constexpr const char* kNotionNames[] = {"acc", "ind", "cor", "min", "minDNE", "seqLasso"};

std::vector<std::vector<ElementId>> predecessor_lists(const FiniteArs& ars) {
  std::vector<std::vector<ElementId>> preds(ars.size());
  for (const auto& [a, b] : ars.steps()) preds[b].push_back(a);
  return preds;
}

bool relation_acyclic(const FiniteArs& ars) {
  SccView scc = scc_view(ars);
  for (std::size_t c = 0; c < scc.component_count(); ++c) {
    if (scc.cyclic[c]) return false;
  }
  return true;
}

// A forward cycle c0 → c1 → ... → c0, taken from the first cyclic SCC.
std::optional<std::vector<ElementId>> find_cycle(const FiniteArs& ars) {
  SccView scc = scc_view(ars);
  for (std::size_t c = 0; c < scc.component_count(); ++c) {
    if (!scc.cyclic[c]) continue;
    ElementId x = scc.components[c].front();
    if (ars.has_step(x, x)) return std::vector<ElementId>{x};
    for (ElementId w : ars.successors(x)) {
      if (scc.component_of[w] != c) continue;
      auto back = path_between(ars, w, x);
      if (!back) continue;
      std::vector<ElementId> cycle{x};
      cycle.insert(cycle.end(), back->nodes.begin(), back->nodes.end() - 1);
      return cycle;
    }
  }
  return std::nullopt;
}

}  // namespace

const char* wf_notion_name(WfNotion n) { return kNotionNames[static_cast<std::size_t>(n)]; }

Predicate Predicate::from_mask(std::size_t n, std::uint64_t mask) {
  Predicate p = Predicate::empty(n);
  for (std::size_t i = 0; i < n; ++i) p.member[i] = (mask >> i) & 1u;
  return p;
}

std::size_t Predicate::count() const {
  return static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
}

Predicate accessible_set(const FiniteArs& ars) {
  auto preds = predecessor_lists(ars);
  Predicate acc = Predicate::empty(ars.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId x = 0; x < ars.size(); ++x) {
      if (acc.member[x]) continue;
      bool all_in = true;
      for (ElementId y : preds[x]) all_in = all_in && acc.member[y];
      if (all_in) {
        acc.member[x] = true;
        changed = true;
      }
    }
  }
  return acc;
}

bool is_inductive(const FiniteArs& ars, const Predicate& p) {
  auto preds = predecessor_lists(ars);
  for (ElementId x = 0; x < ars.size(); ++x) {
    if (p.member[x]) continue;
    bool premise = true;
    for (ElementId y : preds[x]) premise = premise && p.member[y];
    if (premise) return false;
  }
  return true;
}

bool is_coreductive(const FiniteArs& ars, const Predicate& p) {
  auto preds = predecessor_lists(ars);
  for (ElementId x = 0; x < ars.size(); ++x) {
    if (p.member[x]) continue;
    bool witness = false;
    for (ElementId y : preds[x]) witness = witness || !p.member[y];
    if (!witness) return false;
  }
  return true;
}

Predicate minimal_elements(const FiniteArs& ars, const Predicate& p) {
  auto preds = predecessor_lists(ars);
  Predicate out = Predicate::empty(ars.size());
  for (ElementId x = 0; x < ars.size(); ++x) {
    if (!p.member[x]) continue;
    bool minimal = true;
    for (ElementId y : preds[x]) minimal = minimal && !p.member[y];
    out.member[x] = minimal;
  }
  return out;
}

bool is_decreasing_lasso(const FiniteArs& ars, const Lasso& l) {
  if (l.cycle.empty()) return false;
  std::vector<ElementId> all = l.stem;
  all.insert(all.end(), l.cycle.begin(), l.cycle.end());
  for (ElementId v : all) {
    if (v >= ars.size()) return false;
  }
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (!ars.has_step(all[i + 1], all[i])) return false;
  }
  return ars.has_step(l.cycle.front(), l.cycle.back());
}

WfCheckResult wf_check(const FiniteArs& ars, WfNotion notion, std::size_t limit) {
  const std::size_t n = ars.size();
  WfCheckResult result;
  result.notion = notion;

  auto sweep_needed = notion == WfNotion::Ind || notion == WfNotion::Cor ||
                      notion == WfNotion::Min || notion == WfNotion::MinDNE;
  constexpr std::size_t kHardSweepCap = 24;
  if (sweep_needed && n > std::min(limit, kHardSweepCap)) {
    throw CapacityExceededError("wf_check(" + std::string(wf_notion_name(notion)) +
                                "): universe of size " + std::to_string(n) +
                                " exceeds the predicate sweep limit " + std::to_string(limit));
  }

  switch (notion) {
    case WfNotion::Acc: {
      Predicate acc = accessible_set(ars);
      result.holds = acc.is_full();
      if (!result.holds) {
        Predicate inaccessible = Predicate::empty(n);
        for (ElementId x = 0; x < n; ++x) inaccessible.member[x] = !acc.member[x];
        result.predicate_counterexample = inaccessible;
      }
      break;
    }
    case WfNotion::Ind:
    case WfNotion::Cor: {
      result.holds = true;
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Predicate p = Predicate::from_mask(n, mask);
        bool qualifies = notion == WfNotion::Ind ? is_inductive(ars, p)
                                                 : is_coreductive(ars, p);
        if (qualifies && !p.is_full()) {
          result.holds = false;
          result.predicate_counterexample = p;
          break;
        }
      }
      break;
    }
    case WfNotion::Min:
    case WfNotion::MinDNE: {
      // At runtime every predicate is ¬¬-closed, so minDNE is the same sweep.
      result.holds = true;
      for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Predicate p = Predicate::from_mask(n, mask);
        if (minimal_elements(ars, p).is_empty()) {
          result.holds = false;
          result.predicate_counterexample = p;
          break;
        }
      }
      break;
    }
    case WfNotion::SeqLasso: {
      auto cycle = find_cycle(ars);
      result.holds = !cycle.has_value();
      if (cycle) {
        // Reverse the forward cycle into a decreasing sequence.
        Lasso l;
        l.cycle.push_back(cycle->front());
        l.cycle.insert(l.cycle.end(), cycle->rbegin(), cycle->rend() - 1);
        result.lasso_counterexample = std::move(l);
      }
      break;
    }
  }
  return result;
}

BridgeReport bridge_report(const FiniteArs& ars) {
  BridgeReport report;
  auto preds = predecessor_lists(ars);
  Predicate acc = accessible_set(ars);
  report.acc_cor = true;
  for (ElementId x = 0; x < ars.size(); ++x) {
    if (acc.member[x]) continue;
    bool found = false;
    for (ElementId y : preds[x]) {
      if (!acc.member[y]) {
        report.acc_cor_witness[x] = y;
        found = true;
        break;
      }
    }
    if (!found) report.acc_cor = false;
  }
  return report;
}

WfReport wf_equivalence_report(const FiniteArs& ars, std::size_t limit) {
  WfReport report;
  for (std::size_t i = 0; i < kWfNotionCount; ++i) {
    report.verdicts[i] = wf_check(ars, static_cast<WfNotion>(i), limit);
  }
  report.agreement = true;
  for (std::size_t i = 1; i < kWfNotionCount; ++i) {
    if (report.verdicts[i].holds != report.verdicts[0].holds) report.agreement = false;
  }
  report.acyclic = relation_acyclic(ars);
  return report;
}

}  // namespace ars::wf
