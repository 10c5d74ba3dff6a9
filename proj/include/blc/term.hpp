#ifndef BLC_TERM_HPP
#define BLC_TERM_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blc/chain.hpp"
#include "blc/formula.hpp"
#include "blc/valuation.hpp"

namespace blc {

/// Algebra term over element variables. Unlike formulas, terms are
/// evaluated on unbounded hoops too, as long as they avoid the nodes
/// that mention 0 (zero, neg, oplus, noplus).
struct Term {
  enum class Node {
    var,
    zero,
    one,
    mul,
    imp,
    meet,
    join,
    neg,
    oplus,
    uplus,
    pow,
    noplus,
    nuplus,
  };

  Node node = Node::one;
  std::string name;
  std::uint64_t n = 0;
  std::vector<Term> kids;

  static Term Var(std::string v) {
    Term t;
    t.node = Node::var;
    t.name = std::move(v);
    return t;
  }
  static Term Zero() {
    Term t;
    t.node = Node::zero;
    return t;
  }
  static Term One() { return Term{}; }
  static Term binary(Node k, Term a, Term b) {
    Term t;
    t.node = k;
    t.kids.push_back(std::move(a));
    t.kids.push_back(std::move(b));
    return t;
  }
  static Term Mul(Term a, Term b) { return binary(Node::mul, std::move(a), std::move(b)); }
  static Term Imp(Term a, Term b) { return binary(Node::imp, std::move(a), std::move(b)); }
  static Term Meet(Term a, Term b) { return binary(Node::meet, std::move(a), std::move(b)); }
  static Term Join(Term a, Term b) { return binary(Node::join, std::move(a), std::move(b)); }
  static Term Oplus(Term a, Term b) { return binary(Node::oplus, std::move(a), std::move(b)); }
  static Term Uplus(Term a, Term b) { return binary(Node::uplus, std::move(a), std::move(b)); }
  static Term Neg(Term a) {
    Term t;
    t.node = Node::neg;
    t.kids.push_back(std::move(a));
    return t;
  }
  static Term counted(Node k, std::uint64_t n, Term a) {
    if (n == 0) throw argument_error("iterated operation requires n >= 1");
    Term t;
    t.node = k;
    t.n = n;
    t.kids.push_back(std::move(a));
    return t;
  }
  static Term Pow(Term a, std::uint64_t n) { return counted(Node::pow, n, std::move(a)); }
  static Term NOplus(std::uint64_t n, Term a) { return counted(Node::noplus, n, std::move(a)); }
  static Term NUplus(std::uint64_t n, Term a) { return counted(Node::nuplus, n, std::move(a)); }

  friend bool operator==(const Term&, const Term&) = default;
};

inline bool term_needs_bounds(const Term& t) {
  using N = Term::Node;
  if (t.node == N::zero || t.node == N::neg || t.node == N::oplus ||
      t.node == N::noplus)
    return true;
  for (const auto& k : t.kids)
    if (term_needs_bounds(k)) return true;
  return false;
}

namespace detail {
inline void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.node == Term::Node::var) out.insert(t.name);
  for (const auto& k : t.kids) collect_term_vars(k, out);
}

inline Element eval_term_rec(const Term& t, const Chain& c,
                             const Valuation& v) {
  using N = Term::Node;
  switch (t.node) {
    case N::var: return v.at(t.name);
    case N::zero: return c.bottom();
    case N::one: return c.top();
    case N::mul: return c.mul(eval_term_rec(t.kids[0], c, v), eval_term_rec(t.kids[1], c, v));
    case N::imp: return c.imp(eval_term_rec(t.kids[0], c, v), eval_term_rec(t.kids[1], c, v));
    case N::meet: return c.meet(eval_term_rec(t.kids[0], c, v), eval_term_rec(t.kids[1], c, v));
    case N::join: return c.join(eval_term_rec(t.kids[0], c, v), eval_term_rec(t.kids[1], c, v));
    case N::neg: return c.neg(eval_term_rec(t.kids[0], c, v));
    case N::oplus:
      return c.oplus(eval_term_rec(t.kids[0], c, v), eval_term_rec(t.kids[1], c, v));
    case N::uplus:
      return c.uplus(eval_term_rec(t.kids[0], c, v), eval_term_rec(t.kids[1], c, v));
    case N::pow: return c.power(eval_term_rec(t.kids[0], c, v), t.n);
    case N::noplus: return c.nfold_oplus(eval_term_rec(t.kids[0], c, v), t.n);
    case N::nuplus: return c.nfold_uplus(eval_term_rec(t.kids[0], c, v), t.n);
  }
  throw argument_error("unknown term node");
}
}  // namespace detail

inline std::vector<std::string> term_vars(const Term& t) {
  std::set<std::string> s;
  detail::collect_term_vars(t, s);
  return {s.begin(), s.end()};
}

inline Element eval_term(const Term& t, const Chain& c, const Valuation& v) {
  if (!c.bounded() && term_needs_bounds(t))
    throw unsupported_operation(
        "term mentions 0 but the chain is an unbounded hoop");
  return detail::eval_term_rec(t, c, v);
}

/// Formulas reuse the same text grammar as terms; this maps the parsed
/// formula AST onto term nodes (0 becomes the zero constant, & the
/// monoid operation, and so on).
inline Term formula_to_term(const Formula& f) {
  using FN = Formula::Node;
  switch (f.node) {
    case FN::var: return Term::Var(f.name);
    case FN::bottom: return Term::Zero();
    case FN::top: return Term::One();
    case FN::conj: return Term::Mul(formula_to_term(f.kids[0]), formula_to_term(f.kids[1]));
    case FN::impl: return Term::Imp(formula_to_term(f.kids[0]), formula_to_term(f.kids[1]));
    case FN::neg: return Term::Neg(formula_to_term(f.kids[0]));
    case FN::meet: return Term::Meet(formula_to_term(f.kids[0]), formula_to_term(f.kids[1]));
    case FN::join: return Term::Join(formula_to_term(f.kids[0]), formula_to_term(f.kids[1]));
    case FN::strong_disj:
      return Term::Oplus(formula_to_term(f.kids[0]), formula_to_term(f.kids[1]));
    case FN::veebar:
      return Term::Uplus(formula_to_term(f.kids[0]), formula_to_term(f.kids[1]));
    case FN::iff:
      // An equation should be used instead; as a term, <-> is the meet of
      // the two implications.
      return Term::Meet(
          Term::Imp(formula_to_term(f.kids[0]), formula_to_term(f.kids[1])),
          Term::Imp(formula_to_term(f.kids[1]), formula_to_term(f.kids[0])));
    case FN::pow: return Term::Pow(formula_to_term(f.kids[0]), f.n);
    case FN::nsum: return Term::NOplus(f.n, formula_to_term(f.kids[0]));
    case FN::nuplus: return Term::NUplus(f.n, formula_to_term(f.kids[0]));
  }
  throw argument_error("unknown formula node");
}

inline std::string render(const Term& t);

namespace detail {
inline Formula term_to_formula(const Term& t) {
  using N = Term::Node;
  switch (t.node) {
    case N::var: return Formula::Var(t.name);
    case N::zero: return Formula::Bottom();
    case N::one: return Formula::Top();
    case N::mul: return Formula::Conj(term_to_formula(t.kids[0]), term_to_formula(t.kids[1]));
    case N::imp: return Formula::Impl(term_to_formula(t.kids[0]), term_to_formula(t.kids[1]));
    case N::meet: return Formula::Meet(term_to_formula(t.kids[0]), term_to_formula(t.kids[1]));
    case N::join: return Formula::Join(term_to_formula(t.kids[0]), term_to_formula(t.kids[1]));
    case N::neg: return Formula::Neg(term_to_formula(t.kids[0]));
    case N::oplus:
      return Formula::StrongDisj(term_to_formula(t.kids[0]), term_to_formula(t.kids[1]));
    case N::uplus:
      return Formula::VeeBar(term_to_formula(t.kids[0]), term_to_formula(t.kids[1]));
    case N::pow: return Formula::Pow(term_to_formula(t.kids[0]), t.n);
    case N::noplus: return Formula::NSum(t.n, term_to_formula(t.kids[0]));
    case N::nuplus: return Formula::NUplus(t.n, term_to_formula(t.kids[0]));
  }
  throw argument_error("unknown term node");
}
}  // namespace detail

inline std::string render(const Term& t) {
  return render(detail::term_to_formula(t));
}

/// An identity lhs = rhs between terms, with the shared variable list.
struct Equation {
  std::string name;
  Term lhs;
  Term rhs;
  std::vector<std::string> vars;

  static Equation make(std::string name, Term lhs, Term rhs) {
    std::set<std::string> s;
    detail::collect_term_vars(lhs, s);
    detail::collect_term_vars(rhs, s);
    Equation e;
    e.name = std::move(name);
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.vars.assign(s.begin(), s.end());
    return e;
  }

  std::string str() const { return render(lhs) + " = " + render(rhs); }
};

/// Parses "lhs = rhs" where both sides use the formula grammar.
inline Equation parse_equation(std::string_view text,
                               std::string name = "equation") {
  int depth = 0;
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '=' && depth == 0) {
      // not part of "<->" (no other '=' exists in the grammar)
      if (split != std::string_view::npos)
        throw parse_error("more than one '=' in equation", i, "single =");
      split = i;
    }
  }
  if (split == std::string_view::npos)
    throw parse_error("no '=' in equation", text.size(), "lhs = rhs");
  Term lhs = formula_to_term(parse_formula(text.substr(0, split)));
  Term rhs = formula_to_term(parse_formula(text.substr(split + 1)));
  return Equation::make(std::move(name), std::move(lhs), std::move(rhs));
}

/// The named identities used throughout: cha, its oplus twin, p0 and inv,
/// plus every axiom schema as "schema = 1".
inline Equation named_equation(std::string_view name) {
  Term x = Term::Var("x");
  auto ieq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      char p = a[i], q = b[i];
      if (p >= 'A' && p <= 'Z') p = static_cast<char>(p - 'A' + 'a');
      if (q >= 'A' && q <= 'Z') q = static_cast<char>(q - 'A' + 'a');
      if (p != q) return false;
    }
    return true;
  };
  if (ieq(name, "cha"))
    return Equation::make("cha", Term::Pow(Term::NUplus(2, x), 2),
                          Term::NUplus(2, Term::Pow(x, 2)));
  if (ieq(name, "cha-oplus") || ieq(name, "cha2"))
    return Equation::make("cha-oplus", Term::Pow(Term::NOplus(2, x), 2),
                          Term::NOplus(2, Term::Pow(x, 2)));
  if (ieq(name, "p0"))
    return Equation::make(
        "p0", Term::Neg(Term::Pow(Term::Neg(Term::Pow(x, 2)), 2)),
        Term::Pow(Term::Neg(Term::Pow(Term::Neg(x), 2)), 2));
  if (ieq(name, "inv"))
    return Equation::make("inv", Term::Neg(Term::Neg(x)), x);
  // Axiom schemas check out as "instance = 1".
  const Schema& s = schema_by_name(name);
  std::map<std::string, Formula> args = {{"phi", Formula::Var("x")},
                                         {"psi", Formula::Var("y")},
                                         {"chi", Formula::Var("z")}};
  Formula inst = instantiate(s, args);
  if (inst.node == Formula::Node::iff)
    return Equation::make(s.name, formula_to_term(inst.kids[0]),
                          formula_to_term(inst.kids[1]));
  return Equation::make(s.name, formula_to_term(inst), Term::One());
}

}  // namespace blc

#endif
