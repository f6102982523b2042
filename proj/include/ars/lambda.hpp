#ifndef ARS_LAMBDA_HPP_
#define ARS_LAMBDA_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ars/core.hpp"
#include "ars/errors.hpp"

// Untyped lambda calculus over well-scoped de Bruijn terms, instantiating the
// EnumerableArs interface with single-step beta reduction.
namespace ars::lambda {

class Term {
 public:
  enum class Kind { Var, App, Abs };

  static Term var(std::uint32_t index);
  static Term app(Term fn, Term arg);
  static Term abs(Term body);

  Kind kind() const { return node_->kind; }
  std::uint32_t index() const { return node_->index; }  // Var only
  Term fn() const { return Term(node_->left); }         // App only
  Term arg() const { return Term(node_->right); }       // App only
  Term body() const { return Term(node_->left); }       // Abs only

  std::size_t size() const;  // node count
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::uint32_t index = 0;
    std::shared_ptr<const Node> left, right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend struct TermHash;
};

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

// Standard de Bruijn shift: free indices >= cutoff adjusted by amount.
// Throws NegativeIndexError if an index would drop below zero.
Term shift(const Term& t, std::int64_t amount, std::uint32_t cutoff);

// Capture-avoiding substitution of s for index j.
Term substitute(const Term& t, std::uint32_t j, const Term& s);

// All one-step beta reducts, leftmost-outermost redex position first,
// deduplicated preserving first occurrence.
std::vector<Term> beta_step_enum(const Term& t);

// True iff t contains no redex; agrees with beta_step_enum(t) being empty.
bool is_beta_nf(const Term& t);

// Contracts the leftmost-outermost redex; nullopt iff is_beta_nf(t).
std::optional<Term> leftmost_outermost_step(const Term& t);

enum class Strategy { LeftmostOutermost, FirstEnumerated };

struct NormalizeResult {
  bool normalized = false;     // false: fuel exhausted
  Term last;                   // the normal form, or the last term reached
  std::vector<Term> path;      // start, ..., last
  std::size_t steps = 0;
};

// Iterates the strategy at most `fuel` times.  Fuel exhaustion is an
// outcome, not an error.
NormalizeResult normalize(const Term& t, Strategy strategy, std::size_t fuel);

// Beta reduction as a step-enumerated ARS over terms.
EnumerableArs<Term, TermHash> as_enumerable_ars();

// Concrete syntax: `\x. body`, application by juxtaposition
// (left-associative), parentheses, named variables.  Free names resolve
// against `context` in declaration order.  Throws ParseError, UnboundNameError.
Term parse_term(const std::string& text, const std::vector<std::string>& context = {});

// Round-trips through parse_term modulo whitespace (free indices beyond the
// context print as #k and do not reparse).
std::string print_term(const Term& t, const std::vector<std::string>& context = {});

// True iff every variable of t points at one of the n ambient binders.
bool is_closed_under(const Term& t, std::uint32_t n);

// All closed terms with at most max_size nodes, deterministically ordered.
// Verification support for the exhaustive desk checks.
std::vector<Term> enumerate_closed_terms(std::size_t max_size);

}  // namespace ars::lambda

#endif  // ARS_LAMBDA_HPP_
