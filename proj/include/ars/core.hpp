#ifndef ARS_CORE_HPP_
#define ARS_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ars/errors.hpp"

namespace ars {

// Elements of a finite ARS are identified by their index into the universe.
using ElementId = std::uint32_t;

// A finite abstract rewriting system: an element universe with display names
// and a single step relation.  Immutable after construction; successor lists
// are kept sorted in increasing index order so every traversal in the library
// is deterministic.
class FiniteArs {
 public:
  FiniteArs() = default;

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementId a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> index_of(std::string_view name) const;

  // Ascending.
  const std::vector<ElementId>& successors(ElementId a) const { return succ_[a]; }
  bool has_step(ElementId from, ElementId to) const;
  std::size_t step_count() const;
  // Lexicographically ascending (source, target) pairs.
  std::vector<std::pair<ElementId, ElementId>> steps() const;

  bool operator==(const FiniteArs& other) const = default;

  friend FiniteArs build_ars(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& steps);
  friend FiniteArs build_ars_indexed(std::size_t size,
                                     const std::vector<std::pair<ElementId, ElementId>>& steps,
                                     std::vector<std::string> names);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<ElementId>> succ_;
};

// Builds an ARS from display names and named step pairs.  Duplicate steps are
// silently deduplicated; self-loops are permitted.
// Throws DuplicateNameError, UnknownNameError.
FiniteArs build_ars(std::vector<std::string> names,
                    const std::vector<std::pair<std::string, std::string>>& steps);

// Index-based builder; names default to "e0", "e1", ...
// Throws IndexOutOfRangeError, DuplicateNameError.
FiniteArs build_ars_indexed(std::size_t size,
                            const std::vector<std::pair<ElementId, ElementId>>& steps,
                            std::vector<std::string> names = {});

// A materialized boolean relation over the universe of one FiniteArs.
class RelMatrix {
 public:
  RelMatrix() = default;
  explicit RelMatrix(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const { return n_; }
  bool at(ElementId a, ElementId b) const { return bits_[a * n_ + b]; }
  void set(ElementId a, ElementId b, bool v = true) { bits_[a * n_ + b] = v; }

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;

  // View the matrix as a step relation again (names copied from `like`).
  FiniteArs as_ars(const FiniteArs& like) const;

  bool operator==(const RelMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

enum class ClosureMode { Reflexive, Symmetric, Transitive, ReflTransitive, Conversion };

// Materializes the requested closure of the step relation.  Conversion mode
// is (R ∪ R⁻¹)*, the equivalence generated by R.  Dense Floyd–Warshall;
// intended scale is |A| up to a few hundred.
RelMatrix closure(const FiniteArs& ars, ClosureMode mode);

// Steps reversed.  Involution: converse(converse(x)) == x.
FiniteArs converse(const FiniteArs& ars);

// A concrete reduction a →* b: a nonempty node sequence whose consecutive
// pairs are steps.  A single node denotes the empty reduction.
struct PathWitness {
  std::vector<ElementId> nodes;

  ElementId from() const { return nodes.front(); }
  ElementId to() const { return nodes.back(); }
  std::size_t length() const { return nodes.size() - 1; }
  bool validates(const FiniteArs& ars) const;

  static PathWitness trivial(ElementId a) { return PathWitness{{a}}; }
  // Concatenation; requires to() == next.from().
  PathWitness then(const PathWitness& next) const;

  bool operator==(const PathWitness& other) const = default;
};

// Finite presentation of an eventually periodic infinite reduction sequence
// stem · cycle · cycle · ...  The cycle is nonempty and wraps around.
struct Lasso {
  std::vector<ElementId> stem;
  std::vector<ElementId> cycle;

  // Consecutive elements of stem++cycle are steps and the last cycle element
  // steps back to the first.  `reflexive` additionally accepts equal
  // consecutive elements (a lasso over the reflexive closure).
  bool validates(const FiniteArs& ars, bool reflexive = false) const;

  bool operator==(const Lasso& other) const = default;
};

// The k-th element of stem · cycle^ω.
ElementId lasso_denotation(const Lasso& l, std::size_t k);

// Strongly connected component analysis of a FiniteArs, with the acyclic
// condensation.  Components are numbered in a deterministic topological order
// (every condensation edge goes from a lower to a higher component index).
struct SccView {
  std::vector<std::uint32_t> component_of;            // element -> component
  std::vector<std::vector<ElementId>> components;     // ascending inside
  std::vector<std::pair<std::uint32_t, std::uint32_t>> condensation_edges;
  std::vector<bool> cyclic;  // >= 2 nodes or a self-loop

  std::size_t component_count() const { return components.size(); }
  bool is_sink(std::uint32_t comp) const;
  std::vector<std::uint32_t> component_successors(std::uint32_t comp) const;
};

SccView scc_view(const FiniteArs& ars);

// Shortest reduction from `from` to `to` if (from,to) ∈ R*, breadth-first
// with lowest-index tie-breaking.
std::optional<PathWitness> path_between(const FiniteArs& ars, ElementId from, ElementId to);

// BFS forest from one source: distances (SIZE_MAX = unreachable) and parents.
// Shared by path_between and the normal-form witness search.
struct BfsForest {
  std::vector<std::size_t> dist;
  std::vector<ElementId> parent;

  bool reaches(ElementId to) const { return dist[to] != static_cast<std::size_t>(-1); }
  PathWitness path_to(ElementId to) const;  // requires reaches(to)
};

BfsForest bfs_forest(const FiniteArs& ars, ElementId from);

// Step-enumeration interface for infinite or lazily generated systems.  The
// enumeration is deterministic for a fixed key and returns exactly the
// one-step reducts, which realizes both decidability and finite branching.
template <class Key, class Hash = std::hash<Key>>
struct EnumerableArs {
  using key_type = Key;
  using hash_type = Hash;

  std::function<std::vector<Key>(const Key&)> successors;
};

// A FiniteArs seen through the enumeration interface.
EnumerableArs<ElementId> as_enumerable(const FiniteArs& ars);

}  // namespace ars

#endif  // ARS_CORE_HPP_
