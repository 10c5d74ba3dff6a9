#ifndef BLC_CHECKER_HPP
#define BLC_CHECKER_HPP

#include <optional>
#include <string>
#include <vector>

#include "blc/chain.hpp"
#include "blc/formula.hpp"
#include "blc/sources.hpp"
#include "blc/term.hpp"
#include "blc/valuation.hpp"

namespace blc {

/// Outcome of a check. A failing verdict carries a replayable witness:
/// re-evaluating the equation (or formula) at `witness` reproduces
/// exactly the recorded values. "Holds" on an infinite chain only means
/// "holds at every valuation the stated source generated"; only
/// exhaustive verdicts on finite chains are decisions.
struct Verdict {
  bool holds = true;
  // A verdict is decisive when it settles the question outright: any
  // failure (the witness is checkable), or a pass from a full enumeration
  // of a finite carrier. A pass from sampling an infinite chain is not.
  bool decisive = false;
  std::size_t checked = 0;
  std::string source;
  Valuation witness;
  std::optional<Element> lhs;  // failing value(s)
  std::optional<Element> rhs;  // absent for single-value (formula) checks

  static Verdict pass(std::size_t checked, std::string source,
                      bool decisive) {
    Verdict v;
    v.holds = true;
    v.decisive = decisive;
    v.checked = checked;
    v.source = std::move(source);
    return v;
  }

  static Verdict fail(Valuation witness, Element lhs,
                      std::optional<Element> rhs, std::size_t checked,
                      std::string source) {
    Verdict v;
    v.holds = false;
    v.decisive = true;
    v.checked = checked;
    v.source = std::move(source);
    v.witness = std::move(witness);
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    return v;
  }

  std::string str() const {
    if (holds)
      return std::string(decisive ? "holds (exhaustive, " : "holds up to ") +
             std::to_string(checked) + " valuations [" + source + "]" +
             (decisive ? ")" : "");
    std::string out = "fails at {" + witness.str() + "}";
    if (lhs) out += " lhs=" + render(*lhs);
    if (rhs) out += " rhs=" + render(*rhs);
    return out;
  }
};

/// Checks lhs = rhs at every valuation the source generates, stopping at
/// the first failure (first in the source's deterministic order).
inline Verdict check_equation(const Equation& eq, const Chain& c,
                              const ValuationSource& src) {
  std::optional<Verdict> failure;
  std::size_t seen = src.for_each(c, eq.vars, [&](const Valuation& v) {
    Element l = eval_term(eq.lhs, c, v);
    Element r = eval_term(eq.rhs, c, v);
    if (c.cmp(l, r) != Ordering::EQ) {
      failure = Verdict::fail(v, l, r, 0, src.describe());
      return false;
    }
    return true;
  });
  if (failure) {
    failure->checked = seen;
    return *failure;
  }
  bool decisive =
      c.finite() && src.kind() == ValuationSource::Kind::exhaustive;
  return Verdict::pass(seen, src.describe(), decisive);
}

/// Validity of a formula over one chain: Holds iff every generated
/// valuation evaluates to the top.
inline Verdict is_tautology(const Formula& f, const Chain& c,
                            const ValuationSource& src) {
  std::vector<std::string> vars = free_vars(f);
  std::optional<Verdict> failure;
  std::size_t seen = src.for_each(c, vars, [&](const Valuation& v) {
    Element value = evaluate(f, c, v);
    if (!c.is_top(value)) {
      failure = Verdict::fail(v, value, std::nullopt, 0, src.describe());
      return false;
    }
    return true;
  });
  if (failure) {
    failure->checked = seen;
    return *failure;
  }
  bool decisive =
      c.finite() && src.kind() == ValuationSource::Kind::exhaustive;
  return Verdict::pass(seen, src.describe(), decisive);
}

/// Budget for iterative-deepening counterexample search.
struct SearchBudget {
  unsigned denom_max = 64;     // grid deepening bound on rational chains
  unsigned chang_max = 50;     // index deepening bound on Chang
  std::size_t tuple_cap = 2000000;  // per-round valuation ceiling
  std::size_t total_cap = 1000000;  // cumulative valuation ceiling
};

/// Iterative deepening: exhaustive on finite chains (a decision), index
/// deepening on Chang, denominator deepening elsewhere. The first
/// failure found is the enumeration-least one: smallest grid bound, then
/// pool order (denominator, numerator), then lexicographic variable
/// order. Not finding a counterexample does not refute the equation on
/// an infinite chain.
inline Verdict find_counterexample(const Equation& eq, const Chain& c,
                                   const SearchBudget& budget = {}) {
  if (c.finite())
    return check_equation(eq, c, ValuationSource::Exhaustive());
  std::size_t nvars = eq.vars.empty() ? 1 : eq.vars.size();
  bool chang_chain = !c.is_sum() &&
                     c.descriptor_atom().kind == Descriptor::Kind::chang;
  unsigned max_bound = chang_chain ? budget.chang_max : budget.denom_max;
  unsigned start = chang_chain ? 1 : 2;
  std::size_t total = 0;
  std::string last_desc;
  for (unsigned d = start; d <= max_bound; ++d) {
    ValuationSource src = chang_chain ? ValuationSource::ChangIndices(d)
                                      : ValuationSource::Grid(d);
    // Keep rounds within the tuple ceiling.
    std::size_t pool = grid_pool(c, d).size();
    double tuples = 1;
    for (std::size_t i = 0; i < nvars; ++i)
      tuples *= static_cast<double>(pool);
    if (tuples > static_cast<double>(budget.tuple_cap) && d > start) break;
    if (total + static_cast<std::size_t>(tuples) > budget.total_cap &&
        d > start)
      break;
    Verdict v = check_equation(eq, c, src);
    total += v.checked;
    last_desc = src.describe();
    if (!v.holds) {
      v.checked = total;
      return v;
    }
  }
  return Verdict::pass(total,
                       "deepening up to " +
                           (last_desc.empty() ? "(empty budget)" : last_desc),
                       false);
}

/// All ordinal sums of finite MV-chains with total carrier size at most
/// `max_size`, in (size, first-summand-largest) order. Components share
/// the top, so a sum with parts k_0..k_m has 1 + sum(k_i - 1) elements.
inline std::vector<Chain> enumerate_finite_sums(unsigned max_size) {
  if (max_size < 2) throw argument_error("enumerate_finite_sums needs >= 2");
  std::vector<Chain> out;
  // parts[] holds k_i - 1 >= 1; compositions in reverse-lex order.
  std::vector<unsigned> parts;
  auto emit = [&] {
    std::vector<Descriptor> comps;
    for (unsigned p : parts) comps.push_back(Descriptor::finite_mv(p + 1));
    if (comps.size() == 1)
      out.push_back(Chain::make(comps[0]));
    else
      out.push_back(Chain::make(Descriptor::ordinal_sum(comps)));
  };
  auto rec = [&](auto&& self, unsigned remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (unsigned first = remaining; first >= 1; --first) {
      parts.push_back(first);
      self(self, remaining - first);
      parts.pop_back();
    }
  };
  for (unsigned total = 2; total <= max_size; ++total)
    rec(rec, total - 1);
  return out;
}

}  // namespace blc

#endif
