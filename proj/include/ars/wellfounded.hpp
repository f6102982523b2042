#ifndef ARS_WELLFOUNDED_HPP_
#define ARS_WELLFOUNDED_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "ars/core.hpp"

// Well-foundedness notions over a relation R read in the predecessor
// orientation: Rxy denotes a reduction step y → x, so the "predecessors" of x
// are the sources of incoming edges.  ARS-facing adapters apply converse()
// first (strong normalization of S is accessibility w.r.t. converse(S)).
//
// The weak (¬¬) counterparts of these notions collapse at runtime: every
// executable predicate is ¬¬-closed, so each weak notion is realized as its
// strong counterpart.  The collapse is the documented finding, not computed.
namespace ars::wf {

// A subset of the universe of one FiniteArs.
struct Predicate {
  std::vector<bool> member;

  static Predicate empty(std::size_t n) { return Predicate{std::vector<bool>(n, false)}; }
  static Predicate full(std::size_t n) { return Predicate{std::vector<bool>(n, true)}; }
  static Predicate from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return member.size(); }
  bool contains(ElementId x) const { return member[x]; }
  std::size_t count() const;
  bool is_empty() const { return count() == 0; }
  bool is_full() const { return count() == size(); }

  bool operator==(const Predicate& other) const = default;
};

enum class WfNotion { Acc, Ind, Cor, Min, MinDNE, SeqLasso };
constexpr std::size_t kWfNotionCount = 6;

const char* wf_notion_name(WfNotion n);

// Exhaustive predicate sweeps are capped at this universe size by default
// (4096 predicates at most).
constexpr std::size_t kDefaultPredicateLimit = 12;

// Least fixpoint of "x is accessible when all its predecessors are".
Predicate accessible_set(const FiniteArs& ars);

// (∀y. Ryx → y ∈ P) implies x ∈ P, at every x.
bool is_inductive(const FiniteArs& ars, const Predicate& p);

// Every x outside P has a predecessor outside P.
bool is_coreductive(const FiniteArs& ars, const Predicate& p);

// Elements of P none of whose predecessors lie in P.
Predicate minimal_elements(const FiniteArs& ars, const Predicate& p);

// True iff the lasso denotes an R-decreasing sequence: every element steps
// FROM its successor in the sequence (s(k+1) → s(k), wraparound included).
bool is_decreasing_lasso(const FiniteArs& ars, const Lasso& l);

struct WfCheckResult {
  WfNotion notion;
  bool holds = false;
  std::optional<Predicate> predicate_counterexample;  // for acc/ind/cor/min/minDNE
  std::optional<Lasso> lasso_counterexample;          // for seqLasso (decreasing)
};

// Decides one well-foundedness notion.  Notions quantifying over predicates
// (ind, cor, min, minDNE) enumerate all 2^size subsets and require
// size <= limit; throws CapacityExceededError beyond it.
WfCheckResult wf_check(const FiniteArs& ars, WfNotion notion,
                       std::size_t limit = kDefaultPredicateLimit);

// The classical bridge properties of the well-foundedness diagram.  Rdec and
// FB hold by construction on explicit finite relations; accDNE, corDNE and
// MPseq hold by the runtime ¬¬-collapse.  accCor ("accessibility is
// coreductive") is checked extensionally, with a witnessing predecessor map
// on the inaccessible part.
struct BridgeReport {
  bool rdec = true;
  bool fb = true;
  bool mp_seq = true;
  bool cor_dne = true;
  bool acc_dne = true;
  bool acc_cor = false;
  std::map<ElementId, ElementId> acc_cor_witness;  // inaccessible x -> inaccessible pred
};

BridgeReport bridge_report(const FiniteArs& ars);

struct WfReport {
  std::array<WfCheckResult, kWfNotionCount> verdicts;
  bool agreement = false;  // all six verdicts coincide
  bool acyclic = false;    // acyclicity of the relation (the expected verdict)
};

// All six verdicts plus the agreement flag.  On finite instances agreement
// must hold and coincide with acyclicity.
WfReport wf_equivalence_report(const FiniteArs& ars,
                               std::size_t limit = kDefaultPredicateLimit);

}  // namespace ars::wf

#endif  // ARS_WELLFOUNDED_HPP_
