#ifndef BLC_FORMULA_HPP
#define BLC_FORMULA_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blc/chain.hpp"
#include "blc/valuation.hpp"

namespace blc {

/// Propositional formula over the primitive basis {variables, 0, &, ->}
/// plus the usual derived connectives kept as their own nodes so reports
/// can print formulas the way they were written. `expand` rewrites any
/// formula to the primitive basis.
struct Formula {
  enum class Node {
    var,
    bottom,
    conj,         // &
    impl,         // ->
    neg,          // !f         == f -> 0
    top,          // 1          == !0
    meet,         // /\         == f & (f -> g)
    join,         // \/         == ((f->g)->g) /\ ((g->f)->f)
    strong_disj,  // oplus(f,g) == !(!f & !g)
    veebar,       // uplus(f,g) == ((f->(f&g))->g) /\ ((g->(f&g))->f)
    iff,          // <->        == (f->g) /\ (g->f)
    pow,          // pow(f,n)   == f & ... & f
    nsum,         // nsum(n,f)  == oplus fold
    nuplus,       // nuplus(n,f)== uplus fold
  };

  Node node = Node::bottom;
  std::string name;       // var
  std::uint64_t n = 0;    // pow / nsum / nuplus, always >= 1
  std::vector<Formula> kids;

  static Formula Var(std::string v) {
    Formula f;
    f.node = Node::var;
    f.name = std::move(v);
    return f;
  }
  static Formula Bottom() { return Formula{}; }
  static Formula Top() {
    Formula f;
    f.node = Node::top;
    return f;
  }
  static Formula binary(Node k, Formula a, Formula b) {
    Formula f;
    f.node = k;
    f.kids.push_back(std::move(a));
    f.kids.push_back(std::move(b));
    return f;
  }
  static Formula Conj(Formula a, Formula b) {
    return binary(Node::conj, std::move(a), std::move(b));
  }
  static Formula Impl(Formula a, Formula b) {
    return binary(Node::impl, std::move(a), std::move(b));
  }
  static Formula Meet(Formula a, Formula b) {
    return binary(Node::meet, std::move(a), std::move(b));
  }
  static Formula Join(Formula a, Formula b) {
    return binary(Node::join, std::move(a), std::move(b));
  }
  static Formula StrongDisj(Formula a, Formula b) {
    return binary(Node::strong_disj, std::move(a), std::move(b));
  }
  static Formula VeeBar(Formula a, Formula b) {
    return binary(Node::veebar, std::move(a), std::move(b));
  }
  static Formula Iff(Formula a, Formula b) {
    return binary(Node::iff, std::move(a), std::move(b));
  }
  static Formula Neg(Formula a) {
    Formula f;
    f.node = Node::neg;
    f.kids.push_back(std::move(a));
    return f;
  }
  static Formula counted(Node k, std::uint64_t n, Formula a) {
    if (n == 0) throw argument_error("iterated connective requires n >= 1");
    Formula f;
    f.node = k;
    f.n = n;
    f.kids.push_back(std::move(a));
    return f;
  }
  static Formula Pow(Formula a, std::uint64_t n) {
    return counted(Node::pow, n, std::move(a));
  }
  static Formula NSum(std::uint64_t n, Formula a) {
    return counted(Node::nsum, n, std::move(a));
  }
  static Formula NUplus(std::uint64_t n, Formula a) {
    return counted(Node::nuplus, n, std::move(a));
  }

  friend bool operator==(const Formula&, const Formula&) = default;
};

namespace detail {
inline void collect_vars(const Formula& f, std::set<std::string>& out) {
  if (f.node == Formula::Node::var) out.insert(f.name);
  for (const auto& k : f.kids) collect_vars(k, out);
}
}  // namespace detail

inline std::vector<std::string> free_vars(const Formula& f) {
  std::set<std::string> s;
  detail::collect_vars(f, s);
  return {s.begin(), s.end()};
}

/// Rewrites every derived connective into the primitive basis
/// {var, 0, &, ->}. Deterministic and idempotent.
inline Formula expand(const Formula& f) {
  using N = Formula::Node;
  auto fold = [](N k, const Formula& base, std::uint64_t n) {
    Formula acc = base;
    for (std::uint64_t i = 1; i < n; ++i)
      acc = Formula::binary(k, std::move(acc), base);
    return acc;
  };
  switch (f.node) {
    case N::var:
    case N::bottom:
      return f;
    case N::conj:
      return Formula::Conj(expand(f.kids[0]), expand(f.kids[1]));
    case N::impl:
      return Formula::Impl(expand(f.kids[0]), expand(f.kids[1]));
    case N::neg:
      return Formula::Impl(expand(f.kids[0]), Formula::Bottom());
    case N::top:
      return Formula::Impl(Formula::Bottom(), Formula::Bottom());
    case N::meet: {
      Formula a = expand(f.kids[0]), b = expand(f.kids[1]);
      return Formula::Conj(a, Formula::Impl(a, b));
    }
    case N::join: {
      const Formula& a = f.kids[0];
      const Formula& b = f.kids[1];
      return expand(Formula::Meet(
          Formula::Impl(Formula::Impl(a, b), b),
          Formula::Impl(Formula::Impl(b, a), a)));
    }
    case N::strong_disj:
      return expand(Formula::Neg(
          Formula::Conj(Formula::Neg(f.kids[0]), Formula::Neg(f.kids[1]))));
    case N::veebar: {
      const Formula& a = f.kids[0];
      const Formula& b = f.kids[1];
      Formula ab = Formula::Conj(a, b);
      return expand(Formula::Meet(
          Formula::Impl(Formula::Impl(a, ab), b),
          Formula::Impl(Formula::Impl(b, ab), a)));
    }
    case N::iff:
      return expand(Formula::Meet(Formula::Impl(f.kids[0], f.kids[1]),
                                  Formula::Impl(f.kids[1], f.kids[0])));
    case N::pow:
      return expand(fold(N::conj, f.kids[0], f.n));
    case N::nsum:
      return expand(fold(N::strong_disj, f.kids[0], f.n));
    case N::nuplus:
      return expand(fold(N::veebar, f.kids[0], f.n));
  }
  throw argument_error("unknown formula node");
}

/// Truth-functional evaluation over a bounded chain. Derived nodes use
/// the corresponding algebra operations directly; the test suite checks
/// this agrees with evaluating their expansions.
inline Element evaluate(const Formula& f, const Chain& c,
                        const Valuation& v) {
  using N = Formula::Node;
  if (!c.bounded())
    throw unsupported_operation(
        "formula evaluation needs a bounded chain (0 must denote)");
  switch (f.node) {
    case N::var: return v.at(f.name);
    case N::bottom: return c.bottom();
    case N::top: return c.top();
    case N::conj: return c.mul(evaluate(f.kids[0], c, v), evaluate(f.kids[1], c, v));
    case N::impl: return c.imp(evaluate(f.kids[0], c, v), evaluate(f.kids[1], c, v));
    case N::neg: return c.neg(evaluate(f.kids[0], c, v));
    case N::meet: return c.meet(evaluate(f.kids[0], c, v), evaluate(f.kids[1], c, v));
    case N::join: return c.join(evaluate(f.kids[0], c, v), evaluate(f.kids[1], c, v));
    case N::strong_disj:
      return c.oplus(evaluate(f.kids[0], c, v), evaluate(f.kids[1], c, v));
    case N::veebar:
      return c.uplus(evaluate(f.kids[0], c, v), evaluate(f.kids[1], c, v));
    case N::iff: {
      Element a = evaluate(f.kids[0], c, v);
      Element b = evaluate(f.kids[1], c, v);
      return c.meet(c.imp(a, b), c.imp(b, a));
    }
    case N::pow: return c.power(evaluate(f.kids[0], c, v), f.n);
    case N::nsum: return c.nfold_oplus(evaluate(f.kids[0], c, v), f.n);
    case N::nuplus: return c.nfold_uplus(evaluate(f.kids[0], c, v), f.n);
  }
  throw argument_error("unknown formula node");
}

// ---------------------------------------------------------------------------
// Text syntax.
//
//   variables  [a-z][a-zA-Z0-9_]*      constants 0, 1
//   unary      !
//   binary     &  /\  \/  ->  <->   (precedence in that order, -> and <->
//                                    right-associative)
//   functions  oplus(f,g) uplus(f,g) pow(f,n) nsum(n,f) nuplus(n,f)
// ---------------------------------------------------------------------------

namespace detail {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("trailing input", pos_, "end of formula");
    return f;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool try_tok(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    // Do not cut "<->" into "<-" or "->" into "-": the two arrow tokens
    // are the only overlapping pair, handled by trying "<->" first.
    pos_ += tok.size();
    return true;
  }

  Formula parse_iff() {
    Formula l = parse_impl();
    if (try_tok("<->")) return Formula::Iff(std::move(l), parse_iff());
    return l;
  }

  Formula parse_impl() {
    Formula l = parse_join();
    skip_ws();
    // "->" must not swallow the head of "<->"; "<" cannot start here.
    if (text_.substr(pos_, 3) != "<->" && try_tok("->"))
      return Formula::Impl(std::move(l), parse_impl());
    return l;
  }

  Formula parse_join() {
    Formula l = parse_meet();
    while (try_tok("\\/")) l = Formula::Join(std::move(l), parse_meet());
    return l;
  }

  Formula parse_meet() {
    Formula l = parse_conj();
    while (try_tok("/\\")) l = Formula::Meet(std::move(l), parse_conj());
    return l;
  }

  Formula parse_conj() {
    Formula l = parse_unary();
    while (try_tok("&")) l = Formula::Conj(std::move(l), parse_unary());
    return l;
  }

  Formula parse_unary() {
    if (try_tok("!")) return Formula::Neg(parse_unary());
    return parse_primary();
  }

  std::uint64_t parse_nat() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 1000000) throw parse_error("exponent too large", start, "n <= 10^6");
      ++pos_;
    }
    if (pos_ == start)
      throw parse_error("expected a number", pos_, "integer");
    return v;
  }

  Formula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size())
      throw parse_error("unexpected end of formula", pos_,
                        "variable, constant, '!' or '('");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Formula f = parse_iff();
      if (!try_tok(")"))
        throw parse_error("unbalanced parenthesis", pos_, ")");
      return f;
    }
    if (ch >= '0' && ch <= '9') {
      std::size_t start = pos_;
      std::uint64_t v = parse_nat();
      if (v == 0) return Formula::Bottom();
      if (v == 1) return Formula::Top();
      throw parse_error("constants are 0 and 1", start, "0 or 1");
    }
    if (ch >= 'a' && ch <= 'z') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
              (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
              (text_[pos_] >= '0' && text_[pos_] <= '9') ||
              text_[pos_] == '_'))
        ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      skip_ws();
      bool call = pos_ < text_.size() && text_[pos_] == '(';
      if (call && (word == "oplus" || word == "uplus")) {
        ++pos_;
        Formula a = parse_iff();
        expect_comma();
        Formula b = parse_iff();
        expect_close();
        return word == "oplus" ? Formula::StrongDisj(std::move(a), std::move(b))
                               : Formula::VeeBar(std::move(a), std::move(b));
      }
      if (call && word == "pow") {
        ++pos_;
        Formula a = parse_iff();
        expect_comma();
        std::uint64_t n = require_positive(parse_nat());
        expect_close();
        return Formula::Pow(std::move(a), n);
      }
      if (call && (word == "nsum" || word == "nuplus")) {
        ++pos_;
        std::uint64_t n = require_positive(parse_nat());
        expect_comma();
        Formula a = parse_iff();
        expect_close();
        return word == "nsum" ? Formula::NSum(n, std::move(a))
                              : Formula::NUplus(n, std::move(a));
      }
      return Formula::Var(std::move(word));
    }
    throw parse_error(std::string("unexpected character '") + ch + "'", pos_,
                      "variable, constant, '!' or '('");
  }

  std::uint64_t require_positive(std::uint64_t n) {
    if (n == 0)
      throw parse_error("iterated connective requires n >= 1", pos_, "n >= 1");
    return n;
  }

  void expect_comma() {
    if (!try_tok(","))
      throw parse_error("malformed function form", pos_, ",");
  }
  void expect_close() {
    if (!try_tok(")"))
      throw parse_error("malformed function form", pos_, ")");
  }
};

inline int formula_prec(const Formula& f) {
  using N = Formula::Node;
  switch (f.node) {
    case N::iff: return 0;
    case N::impl: return 1;
    case N::join: return 2;
    case N::meet: return 3;
    case N::conj: return 4;
    case N::neg: return 5;
    default: return 6;
  }
}

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text).parse();
}

/// Prints in the text grammar; parse(render(f)) == f node for node.
inline std::string render(const Formula& f) {
  using N = Formula::Node;
  auto wrap = [](const Formula& k, int need) {
    std::string s = render(k);
    return detail::formula_prec(k) < need ? "(" + s + ")" : s;
  };
  switch (f.node) {
    case N::var: return f.name;
    case N::bottom: return "0";
    case N::top: return "1";
    case N::neg: return "!" + wrap(f.kids[0], 5);
    case N::conj: return wrap(f.kids[0], 4) + " & " + wrap(f.kids[1], 5);
    case N::meet: return wrap(f.kids[0], 3) + " /\\ " + wrap(f.kids[1], 4);
    case N::join: return wrap(f.kids[0], 2) + " \\/ " + wrap(f.kids[1], 3);
    case N::impl: return wrap(f.kids[0], 2) + " -> " + wrap(f.kids[1], 1);
    case N::iff: return wrap(f.kids[0], 1) + " <-> " + wrap(f.kids[1], 0);
    case N::strong_disj:
      return "oplus(" + render(f.kids[0]) + ", " + render(f.kids[1]) + ")";
    case N::veebar:
      return "uplus(" + render(f.kids[0]) + ", " + render(f.kids[1]) + ")";
    case N::pow:
      return "pow(" + render(f.kids[0]) + ", " + std::to_string(f.n) + ")";
    case N::nsum:
      return "nsum(" + std::to_string(f.n) + ", " + render(f.kids[0]) + ")";
    case N::nuplus:
      return "nuplus(" + std::to_string(f.n) + ", " + render(f.kids[0]) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Axiom and equation schemas.
// ---------------------------------------------------------------------------

/// Named formula template over the metavariables phi, psi, chi.
struct Schema {
  std::string name;
  Formula body;
  std::vector<std::string> metavars;
};

namespace detail {
inline Formula substitute(const Formula& f,
                          const std::map<std::string, Formula>& args) {
  if (f.node == Formula::Node::var) {
    auto it = args.find(f.name);
    if (it != args.end()) return it->second;
    return f;
  }
  Formula out = f;
  for (auto& k : out.kids) k = substitute(k, args);
  return out;
}
}  // namespace detail

inline Formula instantiate(const Schema& s,
                           const std::map<std::string, Formula>& args) {
  for (const auto& mv : s.metavars)
    if (!args.count(mv))
      throw argument_error("schema " + s.name + " needs metavariable " + mv);
  return detail::substitute(s.body, args);
}

/// The axiom schemas of the basic logic plus the involution, cha and p0
/// equations as biconditional templates.
inline const std::vector<Schema>& schemas() {
  static const std::vector<Schema> all = [] {
    Formula phi = Formula::Var("phi");
    Formula psi = Formula::Var("psi");
    Formula chi = Formula::Var("chi");
    auto I = [](Formula a, Formula b) {
      return Formula::Impl(std::move(a), std::move(b));
    };
    auto C = [](Formula a, Formula b) {
      return Formula::Conj(std::move(a), std::move(b));
    };
    std::vector<Schema> v;
    std::vector<std::string> two = {"phi", "psi"};
    std::vector<std::string> three = {"phi", "psi", "chi"};
    std::vector<std::string> one = {"phi"};
    v.push_back({"A1", I(I(phi, psi), I(I(psi, chi), I(phi, chi))), three});
    v.push_back({"A2", I(C(phi, psi), phi), two});
    v.push_back({"A3", I(C(phi, psi), C(psi, phi)), two});
    v.push_back({"A4", I(C(phi, I(phi, psi)), C(psi, I(psi, phi))), two});
    v.push_back({"A5a", I(I(phi, I(psi, chi)), I(C(phi, psi), chi)), three});
    v.push_back({"A5b", I(I(C(phi, psi), chi), I(phi, I(psi, chi))), three});
    v.push_back(
        {"A6", I(I(I(phi, psi), chi), I(I(I(psi, phi), chi), chi)), three});
    v.push_back({"A7", I(Formula::Bottom(), phi), one});
    v.push_back({"INV", I(Formula::Neg(Formula::Neg(phi)), phi), one});
    v.push_back({"CHA",
                 Formula::Iff(Formula::Pow(Formula::NUplus(2, phi), 2),
                              Formula::NUplus(2, Formula::Pow(phi, 2))),
                 one});
    v.push_back(
        {"P0",
         Formula::Iff(
             Formula::Neg(Formula::Pow(Formula::Neg(Formula::Pow(phi, 2)), 2)),
             Formula::Pow(Formula::Neg(Formula::Pow(Formula::Neg(phi), 2)),
                          2)),
         one});
    return v;
  }();
  return all;
}

inline const Schema& schema_by_name(std::string_view name) {
  auto ieq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      char x = a[i], y = b[i];
      if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
      if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
      if (x != y) return false;
    }
    return true;
  };
  for (const auto& s : schemas())
    if (ieq(s.name, name)) return s;
  throw argument_error("unknown schema '" + std::string(name) + "'");
}

}  // namespace blc

#endif
