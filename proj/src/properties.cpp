#include "ars/properties.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ars {

namespace {

constexpr std::array<const char*, kPropCount> kPropNames = {
    "NF",     "WN",     "SN",     "MF",     "WM",    "SM",
    "SMseq",  "WCR",    "CR",     "SubCommutative",  "NPconv", "NPred",
    "UNconv", "UNred",  "MP",     "CP",     "BP",    "RP",
    "RPminus", "Inc",   "FB",     "Dec"};

}  // namespace

const char* prop_name(Prop p) { return kPropNames[static_cast<std::size_t>(p)]; }

std::optional<Prop> prop_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kPropCount; ++i) {
    if (name == kPropNames[i]) return static_cast<Prop>(i);
  }
  return std::nullopt;
}

bool is_element_prop(Prop p) { return static_cast<std::size_t>(p) < kElementPropCount; }

const std::vector<Prop>& element_props() {
  static const std::vector<Prop> props = [] {
    std::vector<Prop> out;
    for (std::size_t i = 0; i < kElementPropCount; ++i) out.push_back(static_cast<Prop>(i));
    return out;
  }();
  return props;
}

const std::vector<Prop>& all_props() {
  static const std::vector<Prop> props = [] {
    std::vector<Prop> out;
    for (std::size_t i = 0; i < kPropCount; ++i) out.push_back(static_cast<Prop>(i));
    return out;
  }();
  return props;
}

bool ElementProfile::flag(Prop p) const {
  switch (p) {
    case Prop::NF: return nf;
    case Prop::WN: return wn;
    case Prop::SN: return sn;
    case Prop::MF: return mf;
    case Prop::WM: return wm;
    case Prop::SM: return sm;
    case Prop::SMseq: return sm_seq;
    case Prop::WCR: return wcr;
    case Prop::CR: return cr;
    case Prop::SubCommutative: return subcommutative;
    case Prop::NPconv: return np_conv;
    case Prop::NPred: return np_red;
    case Prop::UNconv: return un_conv;
    case Prop::UNred: return un_red;
    case Prop::MP: return mp;
    case Prop::CP: return cp;
    default:
      throw ArsError(std::string("not an element property: ") + prop_name(p));
  }
}

bool GlobalProfile::flag(Prop p) const {
  switch (p) {
    case Prop::NF: return nf;
    case Prop::WN: return wn;
    case Prop::SN: return sn;
    case Prop::MF: return mf;
    case Prop::WM: return wm;
    case Prop::SM: return sm;
    case Prop::SMseq: return sm_seq;
    case Prop::WCR: return wcr;
    case Prop::CR: return cr;
    case Prop::SubCommutative: return subcommutative;
    case Prop::NPconv: return np_conv;
    case Prop::NPred: return np_red;
    case Prop::UNconv: return un_conv;
    case Prop::UNred: return un_red;
    case Prop::MP: return mp;
    case Prop::CP: return cp;
    case Prop::BP: return bp;
    case Prop::RP: return rp;
    case Prop::RPminus: return rp_minus;
    case Prop::Inc: return inc;
    case Prop::FB: return fb;
    case Prop::Dec: return dec;
  }
  return false;
}

bool CofinalityWitness::validates(const FiniteArs& ars) const {
  if (!sequence.validates(ars, /*reflexive=*/true)) return false;
  ElementId start = sequence.stem.empty() ? sequence.cycle.front() : sequence.stem.front();
  if (start != base) return false;
  RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
  for (ElementId y = 0; y < ars.size(); ++y) {
    if (!reach.at(base, y)) continue;
    auto it = coverage.find(y);
    if (it == coverage.end()) return false;
    const auto& [index, path] = it->second;
    if (!path.validates(ars)) return false;
    if (path.from() != y) return false;
    if (path.to() != lasso_denotation(sequence, index)) return false;
  }
  return true;
}

namespace {

// Everything the deciders share, computed once per system.
struct Analysis {
  const FiniteArs& ars;
  std::size_t n;
  RelMatrix reach;        // R*
  RelMatrix conv;         // R= = (R ∪ R⁻¹)*
  RelMatrix joinable;     // ∃d. x →* d *← y
  SccView scc;
  std::vector<bool> comp_reach;  // condensation reachability, k*k
  std::vector<bool> nf, mf, sm, sn;

  bool creach(std::uint32_t a, std::uint32_t b) const {
    return comp_reach[a * scc.component_count() + b];
  }

  explicit Analysis(const FiniteArs& a)
      : ars(a),
        n(a.size()),
        reach(closure(a, ClosureMode::ReflTransitive)),
        conv(closure(a, ClosureMode::Conversion)),
        joinable(n),
        scc(scc_view(a)) {
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = x; y < n; ++y) {
        bool j = false;
        for (ElementId d = 0; d < n && !j; ++d) {
          j = reach.at(x, d) && reach.at(y, d);
        }
        joinable.set(x, y, j);
        joinable.set(y, x, j);
      }
    }

    const std::size_t k = scc.component_count();
    comp_reach.assign(k * k, false);
    for (std::size_t c = 0; c < k; ++c) comp_reach[c * k + c] = true;
    // Components are topologically numbered, so one backward sweep closes.
    for (std::size_t c = k; c-- > 0;) {
      for (const auto& [from, to] : scc.condensation_edges) {
        if (from != c) continue;
        for (std::size_t d = 0; d < k; ++d) {
          if (comp_reach[to * k + d]) comp_reach[c * k + d] = true;
        }
      }
    }

    nf.assign(n, false);
    for (ElementId x = 0; x < n; ++x) nf[x] = ars.successors(x).empty();

    mf.assign(n, false);
    std::vector<bool> comp_sink(k, true);
    for (const auto& [from, to] : scc.condensation_edges) comp_sink[from] = false;
    for (ElementId x = 0; x < n; ++x) mf[x] = comp_sink[scc.component_of[x]];

    // SM: least set containing MF and closed under "all successors inside".
    sm = mf;
    bool changed = true;
    while (changed) {
      changed = false;
      for (ElementId x = 0; x < n; ++x) {
        if (sm[x]) continue;
        bool all_in = true;
        for (ElementId y : ars.successors(x)) {
          if (!sm[y]) {
            all_in = false;
            break;
          }
        }
        if (all_in) {
          sm[x] = true;
          changed = true;
        }
      }
    }

    sn.assign(n, false);
    for (ElementId x = 0; x < n; ++x) {
      bool cyclic_reachable = false;
      std::uint32_t cx = scc.component_of[x];
      for (std::uint32_t c = 0; c < k && !cyclic_reachable; ++c) {
        cyclic_reachable = creach(cx, c) && scc.cyclic[c];
      }
      sn[x] = !cyclic_reachable;
    }
  }

  // No cycle reachable from a inside the induced subgraph on non-MF elements.
  bool sm_seq_at(ElementId a) const {
    if (mf[a]) return true;
    std::vector<bool> visited(n, false);
    std::vector<ElementId> stack{a};
    visited[a] = true;
    std::vector<ElementId> order;
    while (!stack.empty()) {
      ElementId v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (ElementId w : ars.successors(v)) {
        if (mf[w] || visited[w]) continue;
        visited[w] = true;
        stack.push_back(w);
      }
    }
    // A cycle within the visited set would make some visited component cyclic.
    // Check for an edge within the visited set that closes a cycle, via a
    // small DFS (colors: 0 new, 1 on stack, 2 done).
    std::vector<int> color(n, 0);
    for (ElementId root : order) {
      if (color[root] != 0) continue;
      struct Frame {
        ElementId v;
        std::size_t next = 0;
      };
      std::vector<Frame> frames{{root}};
      color[root] = 1;
      while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& succ = ars.successors(f.v);
        bool descended = false;
        while (f.next < succ.size()) {
          ElementId w = succ[f.next++];
          if (mf[w] || !visited[w]) continue;
          if (color[w] == 1) return false;  // back edge: cycle
          if (color[w] == 0) {
            color[w] = 1;
            frames.push_back({w});
            descended = true;
            break;
          }
        }
        if (!descended && f.next >= succ.size()) {
          color[f.v] = 2;
          frames.pop_back();
        }
      }
    }
    return true;
  }

  // Cofinality: a simple path in the condensation from comp(a) such that
  // every component reachable from comp(a) reaches some path component.
  bool cp_at(ElementId a) const {
    const std::size_t k = scc.component_count();
    std::uint32_t c0 = scc.component_of[a];
    std::vector<std::uint32_t> reachable;
    for (std::uint32_t c = 0; c < k; ++c) {
      if (creach(c0, c)) reachable.push_back(c);
    }
    if (reachable.size() > kCpComponentLimit) {
      throw CapacityExceededError(
          "CP decider: condensation reachable from '" + ars.name(a) + "' has " +
          std::to_string(reachable.size()) + " components (limit " +
          std::to_string(kCpComponentLimit) + ")");
    }
    auto covers = [&](const std::vector<std::uint32_t>& path) {
      for (std::uint32_t d : reachable) {
        bool covered = false;
        for (std::uint32_t p : path) {
          if (creach(d, p)) {
            covered = true;
            break;
          }
        }
        if (!covered) return false;
      }
      return true;
    };
    // DFS over condensation paths; only maximal paths need checking, since
    // extending a path can only improve coverage.
    std::vector<std::uint32_t> path{c0};
    std::function<bool()> dfs = [&]() -> bool {
      std::uint32_t tail = path.back();
      bool extended = false;
      for (const auto& [from, to] : scc.condensation_edges) {
        if (from != tail) continue;
        extended = true;
        path.push_back(to);
        if (dfs()) return true;
        path.pop_back();
      }
      if (!extended) return covers(path);
      return false;
    };
    return dfs();
  }
};

PathWitness nearest_normal_form_path(const Analysis& an, ElementId a) {
  BfsForest forest = bfs_forest(an.ars, a);
  std::size_t best_dist = static_cast<std::size_t>(-1);
  ElementId best = a;
  for (ElementId x = 0; x < an.n; ++x) {
    if (!an.nf[x] || !forest.reaches(x)) continue;
    if (forest.dist[x] < best_dist) {
      best_dist = forest.dist[x];
      best = x;
    }
  }
  return forest.path_to(best);
}

ElementProfile profile_one(const Analysis& an, ElementId a) {
  const std::size_t n = an.n;
  ElementProfile p;
  p.element = a;
  p.nf = an.nf[a];
  p.mf = an.mf[a];
  p.sm = an.sm[a];
  p.sn = an.sn[a];
  p.sm_seq = an.sm_seq_at(a);

  bool wn = false, wm = false;
  for (ElementId b = 0; b < n; ++b) {
    if (!an.reach.at(a, b)) continue;
    wn = wn || an.nf[b];
    wm = wm || an.mf[b];
  }
  p.wn = wn;
  p.wm = wm;
  if (wn) p.wn_witness = nearest_normal_form_path(an, a);

  const auto& succ = an.ars.successors(a);
  bool wcr = true, sub = true;
  for (ElementId b : succ) {
    for (ElementId c : succ) {
      if (!an.joinable.at(b, c)) wcr = false;
      bool one_step = false;
      for (ElementId d = 0; d < n && !one_step; ++d) {
        bool left = b == d || an.ars.has_step(b, d);
        bool right = c == d || an.ars.has_step(c, d);
        one_step = left && right;
      }
      if (!one_step) sub = false;
    }
  }
  p.wcr = wcr;
  p.subcommutative = sub;

  bool cr = true;
  for (ElementId b = 0; b < n && cr; ++b) {
    if (!an.reach.at(a, b)) continue;
    for (ElementId c = 0; c < n && cr; ++c) {
      if (!an.reach.at(a, c)) continue;
      cr = an.joinable.at(b, c);
    }
  }
  p.cr = cr;

  bool np_red = true, mp = true;
  std::size_t nf_count = 0;
  for (ElementId b = 0; b < n; ++b) {
    if (!an.reach.at(a, b)) continue;
    if (an.nf[b]) ++nf_count;
    if (an.nf[b] || an.mf[b]) {
      for (ElementId c = 0; c < n; ++c) {
        if (!an.reach.at(a, c)) continue;
        if (!an.reach.at(c, b)) {
          if (an.nf[b]) np_red = false;
          if (an.mf[b]) mp = false;
        }
      }
    }
  }
  p.np_red = np_red;
  p.mp = mp;
  p.un_red = nf_count <= 1;

  bool np_conv = true;
  for (ElementId b = 0; b < n; ++b) {
    if (an.nf[b] && an.conv.at(a, b) && !an.reach.at(a, b)) np_conv = false;
  }
  p.np_conv = np_conv;

  bool un_conv = true;
  if (an.nf[a]) {
    for (ElementId b = 0; b < n; ++b) {
      if (an.nf[b] && an.conv.at(a, b) && b != a) un_conv = false;
    }
  }
  p.un_conv = un_conv;

  p.cp = an.cp_at(a);
  if (p.cp) p.cp_witness = try_cofinality_witness(an.ars, a);
  return p;
}

GlobalProfile global_from(const Analysis& an, const std::vector<ElementProfile>& profiles) {
  GlobalProfile g;
  g.nf = g.wn = g.sn = g.mf = g.wm = g.sm = g.sm_seq = g.wcr = g.cr = true;
  g.subcommutative = g.np_conv = g.np_red = g.un_conv = g.un_red = g.mp = g.cp = true;
  for (const auto& p : profiles) {
    g.nf &= p.nf;
    g.wn &= p.wn;
    g.sn &= p.sn;
    g.mf &= p.mf;
    g.wm &= p.wm;
    g.sm &= p.sm;
    g.sm_seq &= p.sm_seq;
    g.wcr &= p.wcr;
    g.cr &= p.cr;
    g.subcommutative &= p.subcommutative;
    g.np_conv &= p.np_conv;
    g.np_red &= p.np_red;
    g.un_conv &= p.un_conv;
    g.un_red &= p.un_red;
    g.mp &= p.mp;
    g.cp &= p.cp;
  }

  // Every finite ARS is bounded: an increasing sequence eventually stays in
  // one SCC, any element of which bounds it (extract_lasso_bound realizes
  // the justification; testkit samples it).
  g.bp = true;
  g.fb = true;
  g.dec = true;

  const std::size_t k = an.scc.component_count();
  std::vector<bool> comp_sink(k, true);
  for (const auto& [from, to] : an.scc.condensation_edges) comp_sink[from] = false;

  // RP: every cyclic SCC is a sink of the condensation.
  bool rp = true;
  for (std::size_t c = 0; c < k; ++c) {
    if (an.scc.cyclic[c] && !comp_sink[c]) rp = false;
  }
  g.rp = rp;

  // RP⁻, by the independent route: no cyclic SCC may reach an element that
  // cannot come back into it.
  bool rp_minus = true;
  for (std::size_t c = 0; c < k && rp_minus; ++c) {
    if (!an.scc.cyclic[c]) continue;
    ElementId rep = an.scc.components[c].front();
    for (ElementId b = 0; b < an.n && rp_minus; ++b) {
      if (!an.reach.at(rep, b)) continue;
      bool back = false;
      for (ElementId x : an.scc.components[c]) {
        if (an.reach.at(b, x)) {
          back = true;
          break;
        }
      }
      if (!back) rp_minus = false;
    }
  }
  g.rp_minus = rp_minus;

  bool inc = true;
  for (std::size_t c = 0; c < k; ++c) {
    if (an.scc.cyclic[c]) inc = false;
  }
  g.inc = inc;
  if (inc) {
    // Kahn's algorithm with a minimum-index frontier gives the numbering.
    std::vector<std::size_t> indegree(an.n, 0);
    for (const auto& [a, b] : an.ars.steps()) ++indegree[b];
    std::set<ElementId> frontier;
    for (ElementId x = 0; x < an.n; ++x) {
      if (indegree[x] == 0) frontier.insert(x);
    }
    std::vector<std::uint32_t> numbering(an.n, 0);
    std::uint32_t next = 0;
    while (!frontier.empty()) {
      ElementId x = *frontier.begin();
      frontier.erase(frontier.begin());
      numbering[x] = next++;
      for (ElementId y : an.ars.successors(x)) {
        if (--indegree[y] == 0) frontier.insert(y);
      }
    }
    g.inc_witness = std::move(numbering);
  }
  return g;
}

}  // namespace

ElementProfile element_profile(const FiniteArs& ars, ElementId a) {
  if (a >= ars.size()) {
    throw IndexOutOfRangeError("element_profile: index " + std::to_string(a) +
                               " out of range");
  }
  Analysis an(ars);
  return profile_one(an, a);
}

SystemProfile profile_system(const FiniteArs& ars) {
  Analysis an(ars);
  SystemProfile out;
  out.elements.reserve(ars.size());
  for (ElementId a = 0; a < ars.size(); ++a) out.elements.push_back(profile_one(an, a));
  out.global = global_from(an, out.elements);
  return out;
}

GlobalProfile global_profile(const FiniteArs& ars) { return profile_system(ars).global; }

bool check_bound(const FiniteArs& ars, const Lasso& l, ElementId b) {
  if (b >= ars.size()) throw IndexOutOfRangeError("check_bound: candidate out of range");
  if (!l.validates(ars)) throw MalformedLassoError("check_bound: lasso does not validate");
  RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
  for (ElementId x : l.stem) {
    if (!reach.at(x, b)) return false;
  }
  for (ElementId x : l.cycle) {
    if (!reach.at(x, b)) return false;
  }
  return true;
}

std::optional<Join> join_pair(const FiniteArs& ars, ElementId b, ElementId c) {
  if (b >= ars.size() || c >= ars.size()) {
    throw IndexOutOfRangeError("join_pair: element out of range");
  }
  if (b == c) {
    return Join{b, PathWitness::trivial(b), PathWitness::trivial(c)};
  }
  BfsForest from_b = bfs_forest(ars, b);
  BfsForest from_c = bfs_forest(ars, c);
  for (ElementId d = 0; d < ars.size(); ++d) {
    if (from_b.reaches(d) && from_c.reaches(d)) {
      return Join{d, from_b.path_to(d), from_c.path_to(d)};
    }
  }
  return std::nullopt;
}

ElementId extract_lasso_bound(const FiniteArs& ars, const Lasso& l) {
  if (!l.validates(ars)) throw MalformedLassoError("extract_lasso_bound: lasso does not validate");
  return *std::min_element(l.cycle.begin(), l.cycle.end());
}

std::optional<std::size_t> first_minimal_form_index(const FiniteArs& ars, const Lasso& l) {
  if (!l.validates(ars)) {
    throw MalformedLassoError("first_minimal_form_index: lasso does not validate");
  }
  SccView scc = scc_view(ars);
  std::vector<bool> comp_sink(scc.component_count(), true);
  for (const auto& [from, to] : scc.condensation_edges) comp_sink[from] = false;
  const std::size_t total = l.stem.size() + l.cycle.size();
  for (std::size_t k = 0; k < total; ++k) {
    if (comp_sink[scc.component_of[lasso_denotation(l, k)]]) return k;
  }
  return std::nullopt;
}

std::optional<CofinalityWitness> try_cofinality_witness(
    const FiniteArs& ars, ElementId a, std::pair<ElementId, ElementId>* bad_pair) {
  RelMatrix reach = closure(ars, ClosureMode::ReflTransitive);
  CofinalityWitness w;
  w.base = a;
  std::vector<ElementId> sequence{a};
  ElementId endpoint = a;
  for (ElementId y = 0; y < ars.size(); ++y) {
    if (!reach.at(a, y)) continue;
    auto join = join_pair(ars, endpoint, y);
    if (!join) {
      if (bad_pair) *bad_pair = {y, endpoint};
      return std::nullopt;
    }
    // Extend the sequence along endpoint →* target and record where y lands.
    sequence.insert(sequence.end(), join->from_left.nodes.begin() + 1,
                    join->from_left.nodes.end());
    endpoint = join->target;
    w.coverage[y] = {sequence.size() - 1, join->from_right};
  }
  w.sequence.stem = std::move(sequence);
  w.sequence.cycle = {endpoint};
  return w;
}

}  // namespace ars
