#include "ars/lambda.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ars::lambda {

Term Term::var(std::uint32_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->index = index;
  return Term(std::move(node));
}

Term Term::app(Term fn, Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->left = std::move(fn.node_);
  node->right = std::move(arg.node_);
  return Term(std::move(node));
}

Term Term::abs(Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Abs;
  node->left = std::move(body.node_);
  return Term(std::move(node));
}

std::size_t Term::size() const {
  switch (kind()) {
    case Kind::Var: return 1;
    case Kind::Abs: return 1 + body().size();
    case Kind::App: return 1 + fn().size() + arg().size();
  }
  return 0;
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Var: return index() == other.index();
    case Kind::Abs: return body() == other.body();
    case Kind::App: return fn() == other.fn() && arg() == other.arg();
  }
  return false;
}

std::size_t TermHash::operator()(const Term& t) const {
  std::size_t h = 0;
  switch (t.kind()) {
    case Term::Kind::Var: h = 0x9e3779b9u + t.index(); break;
    case Term::Kind::Abs: h = 0x85ebca6bu + 31 * (*this)(t.body()); break;
    case Term::Kind::App:
      h = 0xc2b2ae35u + 31 * (*this)(t.fn()) + 131 * (*this)(t.arg());
      break;
  }
  return h;
}

Term shift(const Term& t, std::int64_t amount, std::uint32_t cutoff) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      if (t.index() < cutoff) return t;
      std::int64_t shifted = static_cast<std::int64_t>(t.index()) + amount;
      if (shifted < 0) {
        throw NegativeIndexError("shift: index " + std::to_string(t.index()) + " by " +
                                 std::to_string(amount) + " drops below zero");
      }
      return Term::var(static_cast<std::uint32_t>(shifted));
    }
    case Term::Kind::Abs:
      return Term::abs(shift(t.body(), amount, cutoff + 1));
    case Term::Kind::App:
      return Term::app(shift(t.fn(), amount, cutoff), shift(t.arg(), amount, cutoff));
  }
  return t;
}

Term substitute(const Term& t, std::uint32_t j, const Term& s) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.index() == j ? s : t;
    case Term::Kind::Abs:
      return Term::abs(substitute(t.body(), j + 1, shift(s, 1, 0)));
    case Term::Kind::App:
      return Term::app(substitute(t.fn(), j, s), substitute(t.arg(), j, s));
  }
  return t;
}

namespace {

bool is_redex(const Term& t) {
  return t.kind() == Term::Kind::App && t.fn().kind() == Term::Kind::Abs;
}

Term contract(const Term& t) {
  // (λ.body) arg  →  body[0 := arg], with the usual shifts.
  Term body = t.fn().body();
  Term arg = t.arg();
  return shift(substitute(body, 0, shift(arg, 1, 0)), -1, 0);
}

// Pre-order redex enumeration: the node itself, then the function subtree,
// then the argument subtree.
void enumerate_reducts(const Term& t, const std::function<Term(const Term&)>& rebuild,
                       std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Abs:
      enumerate_reducts(t.body(), [&](const Term& s) { return rebuild(Term::abs(s)); }, out);
      return;
    case Term::Kind::App: {
      if (is_redex(t)) out.push_back(rebuild(contract(t)));
      Term fn = t.fn();
      Term arg = t.arg();
      enumerate_reducts(fn, [&](const Term& s) { return rebuild(Term::app(s, arg)); }, out);
      enumerate_reducts(arg, [&](const Term& s) { return rebuild(Term::app(fn, s)); }, out);
      return;
    }
  }
}

}  // namespace

std::vector<Term> beta_step_enum(const Term& t) {
  std::vector<Term> raw;
  enumerate_reducts(t, [](const Term& s) { return s; }, raw);
  std::vector<Term> out;
  for (const Term& r : raw) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

bool is_beta_nf(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return true;
    case Term::Kind::Abs: return is_beta_nf(t.body());
    case Term::Kind::App: return !is_redex(t) && is_beta_nf(t.fn()) && is_beta_nf(t.arg());
  }
  return true;
}

std::optional<Term> leftmost_outermost_step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return std::nullopt;
    case Term::Kind::Abs: {
      auto inner = leftmost_outermost_step(t.body());
      if (inner) return Term::abs(*inner);
      return std::nullopt;
    }
    case Term::Kind::App: {
      if (is_redex(t)) return contract(t);
      if (auto inner = leftmost_outermost_step(t.fn())) return Term::app(*inner, t.arg());
      if (auto inner = leftmost_outermost_step(t.arg())) return Term::app(t.fn(), *inner);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

NormalizeResult normalize(const Term& t, Strategy strategy, std::size_t fuel) {
  NormalizeResult result{false, t, {t}, 0};
  Term current = t;
  for (std::size_t i = 0; i < fuel; ++i) {
    std::optional<Term> next;
    if (strategy == Strategy::LeftmostOutermost) {
      next = leftmost_outermost_step(current);
    } else {
      auto reducts = beta_step_enum(current);
      if (!reducts.empty()) next = reducts.front();
    }
    if (!next) {
      result.normalized = true;
      result.last = current;
      return result;
    }
    current = *next;
    result.path.push_back(current);
    ++result.steps;
  }
  result.normalized = is_beta_nf(current);
  result.last = current;
  return result;
}

EnumerableArs<Term, TermHash> as_enumerable_ars() {
  return EnumerableArs<Term, TermHash>{[](const Term& t) { return beta_step_enum(t); }};
}

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& context;
  std::size_t pos = 0;
  std::vector<std::string> binders;  // innermost last

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_name_char() const {
    if (pos >= text.size()) return false;
    char c = text[pos];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string parse_name() {
    std::size_t start = pos;
    while (at_name_char()) ++pos;
    if (pos == start) throw ParseError("expected a variable name", pos);
    return text.substr(start, pos - start);
  }

  Term resolve(const std::string& name, std::size_t at) {
    for (std::size_t i = binders.size(); i-- > 0;) {
      if (binders[i] == name) {
        return Term::var(static_cast<std::uint32_t>(binders.size() - 1 - i));
      }
    }
    for (std::size_t i = 0; i < context.size(); ++i) {
      if (context[i] == name) {
        return Term::var(static_cast<std::uint32_t>(binders.size() + i));
      }
    }
    (void)at;
    throw UnboundNameError(name);
  }

  Term parse_term() {
    skip_ws();
    if (pos < text.size() && text[pos] == '\\') return parse_abs();
    return parse_app();
  }

  Term parse_abs() {
    ++pos;  // consume the lambda marker
    skip_ws();
    std::string name = parse_name();
    skip_ws();
    if (pos >= text.size() || text[pos] != '.') throw ParseError("expected '.'", pos);
    ++pos;
    binders.push_back(name);
    Term body = parse_term();
    binders.pop_back();
    return Term::abs(body);
  }

  Term parse_app() {
    Term current = parse_atom();
    for (;;) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ')') return current;
      current = Term::app(current, parse_atom());
    }
  }

  Term parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    if (text[pos] == '(') {
      ++pos;
      Term inner = parse_term();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
      ++pos;
      return inner;
    }
    if (text[pos] == '\\') return parse_abs();
    std::size_t at = pos;
    return resolve(parse_name(), at);
  }
};

void print_rec(const Term& t, std::uint32_t depth, const std::vector<std::string>& context,
               bool parenthesize_app, bool parenthesize_abs, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      if (t.index() < depth) {
        out += "x" + std::to_string(depth - 1 - t.index());
      } else {
        std::size_t free = t.index() - depth;
        if (free < context.size()) {
          out += context[free];
        } else {
          out += "#" + std::to_string(t.index());
        }
      }
      return;
    }
    case Term::Kind::Abs: {
      if (parenthesize_abs) out += "(";
      out += "\\x" + std::to_string(depth) + ". ";
      print_rec(t.body(), depth + 1, context, false, false, out);
      if (parenthesize_abs) out += ")";
      return;
    }
    case Term::Kind::App: {
      if (parenthesize_app) out += "(";
      // Left child keeps application flat; abstractions on the left always
      // need parentheses.
      print_rec(t.fn(), depth, context, t.fn().kind() == Term::Kind::Abs,
                t.fn().kind() == Term::Kind::Abs, out);
      out += " ";
      print_rec(t.arg(), depth, context, t.arg().kind() == Term::Kind::App,
                t.arg().kind() == Term::Kind::Abs, out);
      if (parenthesize_app) out += ")";
      return;
    }
  }
}

}  // namespace

Term parse_term(const std::string& text, const std::vector<std::string>& context) {
  Parser parser{text, context, 0, {}};
  Term t = parser.parse_term();
  parser.skip_ws();
  if (parser.pos != text.size()) throw ParseError("trailing input", parser.pos);
  return t;
}

std::string print_term(const Term& t, const std::vector<std::string>& context) {
  std::string out;
  print_rec(t, 0, context, false, false, out);
  return out;
}

bool is_closed_under(const Term& t, std::uint32_t n) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.index() < n;
    case Term::Kind::Abs: return is_closed_under(t.body(), n + 1);
    case Term::Kind::App:
      return is_closed_under(t.fn(), n) && is_closed_under(t.arg(), n);
  }
  return false;
}

namespace {

// Terms with exactly `size` nodes under `depth` binders.
std::vector<Term> terms_of_size(std::size_t size, std::uint32_t depth) {
  std::vector<Term> out;
  if (size == 0) return out;
  if (size == 1) {
    for (std::uint32_t i = 0; i < depth; ++i) out.push_back(Term::var(i));
    return out;
  }
  for (const Term& body : terms_of_size(size - 1, depth + 1)) {
    out.push_back(Term::abs(body));
  }
  for (std::size_t left = 1; left + 1 < size; ++left) {
    auto fns = terms_of_size(left, depth);
    auto args = terms_of_size(size - 1 - left, depth);
    for (const Term& fn : fns) {
      for (const Term& arg : args) out.push_back(Term::app(fn, arg));
    }
  }
  return out;
}

}  // namespace

std::vector<Term> enumerate_closed_terms(std::size_t max_size) {
  std::vector<Term> out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    auto terms = terms_of_size(size, 0);
    out.insert(out.end(), terms.begin(), terms.end());
  }
  return out;
}

}  // namespace ars::lambda
