#include "ars/core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace ars {

std::optional<ElementId> FiniteArs::index_of(std::string_view name) const {
  for (ElementId i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool FiniteArs::has_step(ElementId from, ElementId to) const {
  const auto& s = succ_[from];
  return std::binary_search(s.begin(), s.end(), to);
}

std::size_t FiniteArs::step_count() const {
  std::size_t count = 0;
  for (const auto& s : succ_) count += s.size();
  return count;
}

std::vector<std::pair<ElementId, ElementId>> FiniteArs::steps() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  out.reserve(step_count());
  for (ElementId a = 0; a < succ_.size(); ++a) {
    for (ElementId b : succ_[a]) out.emplace_back(a, b);
  }
  return out;
}

FiniteArs build_ars(std::vector<std::string> names,
                    const std::vector<std::pair<std::string, std::string>>& steps) {
  if (names.empty()) throw DuplicateNameError("(empty element list)");
  std::unordered_map<std::string, ElementId> index;
  for (ElementId i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) throw DuplicateNameError(names[i]);
  }
  std::vector<std::pair<ElementId, ElementId>> pairs;
  pairs.reserve(steps.size());
  for (const auto& [from, to] : steps) {
    auto fit = index.find(from);
    if (fit == index.end()) throw UnknownNameError(from);
    auto tit = index.find(to);
    if (tit == index.end()) throw UnknownNameError(to);
    pairs.emplace_back(fit->second, tit->second);
  }
  const std::size_t size = names.size();
  return build_ars_indexed(size, pairs, std::move(names));
}

FiniteArs build_ars_indexed(std::size_t size,
                            const std::vector<std::pair<ElementId, ElementId>>& steps,
                            std::vector<std::string> names) {
  if (size == 0) throw DuplicateNameError("(empty element list)");
  if (names.empty()) {
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  }
  if (names.size() != size) {
    throw IndexOutOfRangeError("name list does not match universe size");
  }
  FiniteArs out;
  out.names_ = std::move(names);
  out.succ_.assign(size, {});
  std::set<std::pair<ElementId, ElementId>> seen;
  for (const auto& [from, to] : steps) {
    if (from >= size || to >= size) {
      throw IndexOutOfRangeError("step index " + std::to_string(std::max(from, to)) +
                                 " out of range for universe of size " + std::to_string(size));
    }
    if (seen.insert({from, to}).second) out.succ_[from].push_back(to);
  }
  for (auto& s : out.succ_) std::sort(s.begin(), s.end());
  return out;
}

bool RelMatrix::is_reflexive() const {
  for (ElementId a = 0; a < n_; ++a) {
    if (!at(a, a)) return false;
  }
  return true;
}

bool RelMatrix::is_symmetric() const {
  for (ElementId a = 0; a < n_; ++a) {
    for (ElementId b = 0; b < n_; ++b) {
      if (at(a, b) != at(b, a)) return false;
    }
  }
  return true;
}

bool RelMatrix::is_transitive() const {
  for (ElementId a = 0; a < n_; ++a) {
    for (ElementId b = 0; b < n_; ++b) {
      if (!at(a, b)) continue;
      for (ElementId c = 0; c < n_; ++c) {
        if (at(b, c) && !at(a, c)) return false;
      }
    }
  }
  return true;
}

FiniteArs RelMatrix::as_ars(const FiniteArs& like) const {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId a = 0; a < n_; ++a) {
    for (ElementId b = 0; b < n_; ++b) {
      if (at(a, b)) pairs.emplace_back(a, b);
    }
  }
  return build_ars_indexed(n_, pairs, like.names());
}

RelMatrix closure(const FiniteArs& ars, ClosureMode mode) {
  const std::size_t n = ars.size();
  RelMatrix m(n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b : ars.successors(a)) m.set(a, b);
  }
  const bool symmetric = mode == ClosureMode::Symmetric || mode == ClosureMode::Conversion;
  if (symmetric) {
    for (const auto& [a, b] : ars.steps()) m.set(b, a);
  }
  const bool reflexive = mode == ClosureMode::Reflexive ||
                         mode == ClosureMode::ReflTransitive ||
                         mode == ClosureMode::Conversion;
  if (reflexive) {
    for (ElementId a = 0; a < n; ++a) m.set(a, a);
  }
  const bool transitive = mode == ClosureMode::Transitive ||
                          mode == ClosureMode::ReflTransitive ||
                          mode == ClosureMode::Conversion;
  if (transitive) {
    for (ElementId k = 0; k < n; ++k) {
      for (ElementId a = 0; a < n; ++a) {
        if (!m.at(a, k)) continue;
        for (ElementId b = 0; b < n; ++b) {
          if (m.at(k, b)) m.set(a, b);
        }
      }
    }
  }
  return m;
}

FiniteArs converse(const FiniteArs& ars) {
  std::vector<std::pair<ElementId, ElementId>> reversed;
  for (const auto& [a, b] : ars.steps()) reversed.emplace_back(b, a);
  return build_ars_indexed(ars.size(), reversed, ars.names());
}

bool PathWitness::validates(const FiniteArs& ars) const {
  if (nodes.empty()) return false;
  for (ElementId v : nodes) {
    if (v >= ars.size()) return false;
  }
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!ars.has_step(nodes[i], nodes[i + 1])) return false;
  }
  return true;
}

PathWitness PathWitness::then(const PathWitness& next) const {
  PathWitness out = *this;
  out.nodes.insert(out.nodes.end(), next.nodes.begin() + 1, next.nodes.end());
  return out;
}

bool Lasso::validates(const FiniteArs& ars, bool reflexive) const {
  if (cycle.empty()) return false;
  std::vector<ElementId> all = stem;
  all.insert(all.end(), cycle.begin(), cycle.end());
  for (ElementId v : all) {
    if (v >= ars.size()) return false;
  }
  auto ok = [&](ElementId a, ElementId b) {
    return ars.has_step(a, b) || (reflexive && a == b);
  };
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (!ok(all[i], all[i + 1])) return false;
  }
  return ok(cycle.back(), cycle.front());
}

ElementId lasso_denotation(const Lasso& l, std::size_t k) {
  if (l.cycle.empty()) throw MalformedLassoError("lasso has an empty cycle");
  if (k < l.stem.size()) return l.stem[k];
  return l.cycle[(k - l.stem.size()) % l.cycle.size()];
}

bool SccView::is_sink(std::uint32_t comp) const {
  for (const auto& [from, to] : condensation_edges) {
    if (from == comp) return false;
  }
  return true;
}

std::vector<std::uint32_t> SccView::component_successors(std::uint32_t comp) const {
  std::vector<std::uint32_t> out;
  for (const auto& [from, to] : condensation_edges) {
    if (from == comp) out.push_back(to);
  }
  return out;
}

namespace {

// Iterative Tarjan; components come out in reverse topological order and are
// then renumbered so condensation edges always increase.
struct TarjanState {
  const FiniteArs& ars;
  std::vector<std::uint32_t> index, lowlink;
  std::vector<bool> on_stack;
  std::vector<ElementId> stack;
  std::uint32_t counter = 0;
  std::vector<std::vector<ElementId>> components;
  std::vector<std::uint32_t> component_of;

  explicit TarjanState(const FiniteArs& a)
      : ars(a),
        index(a.size(), UINT32_MAX),
        lowlink(a.size(), 0),
        on_stack(a.size(), false),
        component_of(a.size(), 0) {}

  void run(ElementId root) {
    struct Frame {
      ElementId v;
      std::size_t next_child = 0;
    };
    std::vector<Frame> frames{{root}};
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& succ = ars.successors(f.v);
      if (f.next_child < succ.size()) {
        ElementId w = succ[f.next_child++];
        if (index[w] == UINT32_MAX) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          std::vector<ElementId> comp;
          ElementId w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
          } while (w != f.v);
          std::sort(comp.begin(), comp.end());
          for (ElementId x : comp) component_of[x] = components.size();
          components.push_back(std::move(comp));
        }
        ElementId v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
        }
      }
    }
  }
};

}  // namespace

SccView scc_view(const FiniteArs& ars) {
  TarjanState t(ars);
  for (ElementId v = 0; v < ars.size(); ++v) {
    if (t.index[v] == UINT32_MAX) t.run(v);
  }
  // Tarjan emits components in reverse topological order.
  const std::size_t k = t.components.size();
  SccView view;
  view.components.resize(k);
  view.component_of.assign(ars.size(), 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t renumbered = k - 1 - c;
    view.components[renumbered] = std::move(t.components[c]);
    for (ElementId x : view.components[renumbered]) view.component_of[x] = renumbered;
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  view.cyclic.assign(k, false);
  for (std::uint32_t c = 0; c < k; ++c) {
    if (view.components[c].size() > 1) view.cyclic[c] = true;
  }
  for (const auto& [a, b] : ars.steps()) {
    std::uint32_t ca = view.component_of[a];
    std::uint32_t cb = view.component_of[b];
    if (ca == cb) {
      if (a == b) view.cyclic[ca] = true;
      continue;
    }
    edges.insert({ca, cb});
  }
  view.condensation_edges.assign(edges.begin(), edges.end());
  return view;
}

BfsForest bfs_forest(const FiniteArs& ars, ElementId from) {
  BfsForest out;
  out.dist.assign(ars.size(), static_cast<std::size_t>(-1));
  out.parent.assign(ars.size(), from);
  std::deque<ElementId> queue{from};
  out.dist[from] = 0;
  while (!queue.empty()) {
    ElementId v = queue.front();
    queue.pop_front();
    for (ElementId w : ars.successors(v)) {
      if (out.dist[w] != static_cast<std::size_t>(-1)) continue;
      out.dist[w] = out.dist[v] + 1;
      out.parent[w] = v;
      queue.push_back(w);
    }
  }
  return out;
}

PathWitness BfsForest::path_to(ElementId to) const {
  std::vector<ElementId> nodes{to};
  while (dist[nodes.back()] != 0) nodes.push_back(parent[nodes.back()]);
  std::reverse(nodes.begin(), nodes.end());
  return PathWitness{std::move(nodes)};
}

std::optional<PathWitness> path_between(const FiniteArs& ars, ElementId from, ElementId to) {
  if (from >= ars.size() || to >= ars.size()) {
    throw IndexOutOfRangeError("path_between: element out of range");
  }
  BfsForest forest = bfs_forest(ars, from);
  if (!forest.reaches(to)) return std::nullopt;
  return forest.path_to(to);
}

EnumerableArs<ElementId> as_enumerable(const FiniteArs& ars) {
  return EnumerableArs<ElementId>{
      [ars](const ElementId& a) { return ars.successors(a); }};
}

}  // namespace ars
