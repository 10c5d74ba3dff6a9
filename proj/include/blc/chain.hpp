#ifndef BLC_CHAIN_HPP
#define BLC_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blc/descriptor.hpp"
#include "blc/element.hpp"
#include "blc/errors.hpp"

namespace blc {

/// Result of an order computation: the least n with x^n = 0, known to be
/// infinite, or not reached within the iteration cutoff.
struct Ord {
  enum class Kind { finite, infinite, infinite_up_to };
  Kind kind = Kind::infinite;
  std::uint64_t n = 0;  // order when finite, cutoff when infinite_up_to

  bool is_finite() const { return kind == Kind::finite; }

  static Ord fin(std::uint64_t v) { return {Kind::finite, v}; }
  static Ord inf() { return {Kind::infinite, 0}; }
  static Ord inf_up_to(std::uint64_t cutoff) {
    return {Kind::infinite_up_to, cutoff};
  }

  std::string str() const {
    switch (kind) {
      case Kind::finite: return std::to_string(n);
      case Kind::infinite: return "inf";
      case Kind::infinite_up_to: return "inf(>" + std::to_string(n) + ")";
    }
    return "?";
  }

  friend bool operator==(const Ord&, const Ord&) = default;
};

namespace detail {

inline bool atom_bounded(const Descriptor& d) {
  return d.kind != Descriptor::Kind::cancellative;
}

inline bool atom_finite(const Descriptor& d) {
  using K = Descriptor::Kind;
  return d.kind == K::finite_godel || d.kind == K::finite_mv;
}

inline bool atom_is_rational(const Descriptor& d) {
  using K = Descriptor::Kind;
  return d.kind == K::finite_godel || d.kind == K::finite_mv ||
         d.kind == K::standard_mv || d.kind == K::standard_godel ||
         d.kind == K::cancellative;
}

inline AtomElem atom_top(const Descriptor& d) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::chang: return ChangElem::a(0);
    case K::rotation: return RotElem::pos(Rational::one());
    default: return Rational::one();
  }
}

inline AtomElem atom_bottom(const Descriptor& d) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::chang: return ChangElem::b(0);
    case K::rotation: return RotElem::neg(Rational::one());
    case K::cancellative:
      throw unsupported_operation("cancellative hoop has no minimum");
    default: return Rational::zero();
  }
}

inline void atom_validate(const Descriptor& d, const AtomElem& x) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::chang:
      if (!std::holds_alternative<ChangElem>(x))
        throw encoding_error("element is not a Chang index pair");
      return;
    case K::rotation: {
      const RotElem* r = std::get_if<RotElem>(&x);
      if (!r) throw encoding_error("element is not a rotation element");
      if (!(Rational::zero() < r->value) || !(r->value <= Rational::one()))
        throw encoding_error("rotation payload " + r->value.str() +
                             " outside (0,1]");
      return;
    }
    default: {
      const Rational* q = std::get_if<Rational>(&x);
      if (!q) throw encoding_error("element is not a rational");
      if (d.kind == K::cancellative) {
        if (!(Rational::zero() < *q) || !(*q <= Rational::one()))
          throw encoding_error("element " + q->str() + " outside (0,1]");
        return;
      }
      if (*q < Rational::zero() || *q > Rational::one())
        throw encoding_error("element " + q->str() + " outside [0,1]");
      if (atom_finite(d)) {
        Rational scaled = *q * Rational(static_cast<long>(d.size) - 1);
        if (!scaled.is_integer())
          throw encoding_error("element " + q->str() +
                               " not on the " + std::to_string(d.size) +
                               "-element grid");
      }
      return;
    }
  }
}

inline Ordering atom_cmp(const Descriptor& d, const AtomElem& x,
                         const AtomElem& y) {
  using K = Descriptor::Kind;
  if (d.kind == K::chang)
    return cmp(std::get<ChangElem>(x), std::get<ChangElem>(y));
  if (d.kind == K::rotation)
    return cmp(std::get<RotElem>(x), std::get<RotElem>(y));
  const Rational& a = std::get<Rational>(x);
  const Rational& b = std::get<Rational>(y);
  if (a == b) return Ordering::EQ;
  return a < b ? Ordering::LT : Ordering::GT;
}

inline AtomElem atom_mul(const Descriptor& d, const AtomElem& x,
                         const AtomElem& y) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::finite_mv:
    case K::standard_mv: {
      const Rational& a = std::get<Rational>(x);
      const Rational& b = std::get<Rational>(y);
      return max(Rational::zero(), a + b - Rational::one());
    }
    case K::finite_godel:
    case K::standard_godel:
      return min(std::get<Rational>(x), std::get<Rational>(y));
    case K::cancellative:
      return std::get<Rational>(x) * std::get<Rational>(y);
    case K::chang: {
      const ChangElem& a = std::get<ChangElem>(x);
      const ChangElem& b = std::get<ChangElem>(y);
      using S = ChangElem::Side;
      if (a.side == S::B && b.side == S::B) return ChangElem::b(0);
      if (a.side == S::A && b.side == S::A)
        return ChangElem::a(a.index + b.index);
      const ChangElem& bn = a.side == S::B ? a : b;  // b_n * a_m
      const ChangElem& am = a.side == S::B ? b : a;
      return ChangElem::b(bn.index > am.index ? bn.index - am.index : 0);
    }
    case K::rotation: {
      const RotElem& a = std::get<RotElem>(x);
      const RotElem& b = std::get<RotElem>(y);
      if (a.positive && b.positive) return RotElem::pos(a.value * b.value);
      if (!a.positive && !b.positive) return RotElem::neg(Rational::one());
      const RotElem& p = a.positive ? a : b;
      const RotElem& n = a.positive ? b : a;
      // p * n' = ~(p => ~n') with both inner values in (0,1].
      return RotElem::neg(min(Rational::one(), n.value / p.value));
    }
    default:
      throw construction_error("not an atomic chain");
  }
}

inline AtomElem atom_imp(const Descriptor& d, const AtomElem& x,
                         const AtomElem& y) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::finite_mv:
    case K::standard_mv: {
      const Rational& a = std::get<Rational>(x);
      const Rational& b = std::get<Rational>(y);
      if (a <= b) return Rational::one();
      return Rational::one() - a + b;
    }
    case K::finite_godel:
    case K::standard_godel: {
      const Rational& a = std::get<Rational>(x);
      const Rational& b = std::get<Rational>(y);
      return a <= b ? Rational::one() : b;
    }
    case K::cancellative: {
      const Rational& a = std::get<Rational>(x);
      const Rational& b = std::get<Rational>(y);
      return a <= b ? Rational::one() : b / a;
    }
    case K::chang: {
      // Closed forms; validated against the residuation-search oracle in
      // the test suite.
      const ChangElem& a = std::get<ChangElem>(x);
      const ChangElem& b = std::get<ChangElem>(y);
      using S = ChangElem::Side;
      if (a.side == S::A && b.side == S::A)
        return ChangElem::a(b.index > a.index ? b.index - a.index : 0);
      if (a.side == S::B && b.side == S::B)
        return ChangElem::a(a.index > b.index ? a.index - b.index : 0);
      if (a.side == S::A)  // a_n => b_m
        return ChangElem::b(a.index + b.index);
      return ChangElem::a(0);  // b_n => a_m
    }
    case K::rotation: {
      const RotElem& a = std::get<RotElem>(x);
      const RotElem& b = std::get<RotElem>(y);
      if (a.positive && b.positive)
        return RotElem::pos(min(Rational::one(), b.value / a.value));
      if (a.positive && !b.positive)
        return RotElem::neg(a.value * b.value);
      if (!a.positive && b.positive) return RotElem::pos(Rational::one());
      return RotElem::pos(min(Rational::one(), a.value / b.value));
    }
    default:
      throw construction_error("not an atomic chain");
  }
}

inline bool atom_is_top(const Descriptor& d, const AtomElem& x) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::chang: {
      const ChangElem& c = std::get<ChangElem>(x);
      return c.side == ChangElem::Side::A && c.index == 0;
    }
    case K::rotation: {
      const RotElem& r = std::get<RotElem>(x);
      return r.positive && r.value == Rational::one();
    }
    default:
      return std::get<Rational>(x) == Rational::one();
  }
}

inline Ord atom_ord(const Descriptor& d, const AtomElem& x,
                    std::uint64_t cutoff) {
  using K = Descriptor::Kind;
  switch (d.kind) {
    case K::chang: {
      const ChangElem& c = std::get<ChangElem>(x);
      if (c.side == ChangElem::Side::A) return Ord::inf();
      return Ord::fin(c.index == 0 ? 1 : 2);
    }
    case K::rotation: {
      const RotElem& r = std::get<RotElem>(x);
      if (r.positive) return Ord::inf();
      return Ord::fin(r.value == Rational::one() ? 1 : 2);
    }
    case K::cancellative:
      throw unsupported_operation("ord on an unbounded hoop");
    default: {
      // Iterate powers; a nonzero fixed point decides infinity exactly.
      AtomElem p = x;
      for (std::uint64_t n = 1; n <= cutoff; ++n) {
        if (atom_cmp(d, p, Rational::zero()) == Ordering::EQ)
          return Ord::fin(n);
        AtomElem next = atom_mul(d, p, x);
        if (atom_cmp(d, next, p) == Ordering::EQ) return Ord::inf();
        p = next;
      }
      return Ord::inf_up_to(cutoff);
    }
  }
}

inline std::vector<AtomElem> atom_carrier(const Descriptor& d) {
  if (!atom_finite(d))
    throw unsupported_operation("carrier of an infinite chain");
  std::vector<AtomElem> out;
  long k = static_cast<long>(d.size);
  for (long i = 0; i < k; ++i) out.push_back(Rational(i, k - 1));
  return out;
}

inline AtomElem parse_atom_elem(const Descriptor& d, std::string_view text);

}  // namespace detail

/// A totally ordered BL-algebra or hoop from the catalogue, with its
/// operations. Immutable value; all operations are pure.
class Chain {
 public:
  static Chain make(const Descriptor& d) { return Chain(d); }
  static Chain make(std::string_view descriptor_text) {
    return Chain(parse_descriptor(descriptor_text));
  }

  const std::string& name() const { return name_; }
  const Descriptor& descriptor() const { return original_; }

  bool bounded() const { return bounded_; }
  bool is_sum() const { return is_sum_; }
  bool is_omega() const { return omega_; }

  std::size_t component_count() const {
    if (omega_)
      throw unsupported_operation("omega sum has unboundedly many components");
    return comps_.size();
  }
  /// Number of components to visit for sampling/search (omega sums are
  /// truncated to a fixed window; elements beyond it are still valid).
  std::size_t component_window() const {
    return omega_ ? kOmegaWindow : comps_.size();
  }
  const Descriptor& component_atom(std::size_t i) const {
    if (omega_) return comps_[0];
    if (i >= comps_.size()) throw argument_error("component out of range");
    return comps_[i];
  }

  /// The atomic descriptor of a non-sum chain.
  const Descriptor& descriptor_atom() const {
    if (is_sum_)
      throw unsupported_operation("ordinal sum is not an atomic chain");
    return comps_[0];
  }

  bool finite() const {
    if (omega_) return false;
    for (const auto& c : comps_)
      if (!detail::atom_finite(c)) return false;
    return true;
  }

  /// Ascending carrier of a finite chain.
  std::vector<Element> carrier() const {
    if (!finite()) throw unsupported_operation("carrier of an infinite chain");
    std::vector<Element> out;
    if (!is_sum_) {
      for (auto& a : detail::atom_carrier(comps_[0]))
        out.push_back(to_element(a));
      return out;
    }
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      auto local = detail::atom_carrier(comps_[i]);
      for (auto& a : local)
        if (!detail::atom_is_top(comps_[i], a))
          out.push_back(Element(SumElem::at(i, a)));
    }
    out.push_back(Element(SumElem::top()));
    return out;
  }

  const Element& top() const { return top_e_; }

  const Element& bottom() const {
    require_bounded("bottom");
    return *bottom_e_;
  }

  void validate(const Element& x) const {
    if (!is_sum_) {
      if (std::holds_alternative<SumElem>(x))
        throw encoding_error("ordinal-sum element on a plain chain");
      detail::atom_validate(comps_[0], as_atom(x));
      return;
    }
    const SumElem* s = std::get_if<SumElem>(&x);
    if (!s) throw encoding_error("element of an ordinal sum must be a "
                                 "component/payload pair or the top");
    if (s->is_top()) return;
    if (!omega_ && s->part->component >= comps_.size())
      throw encoding_error("component index " +
                           std::to_string(s->part->component) +
                           " out of range");
    const Descriptor& c = component_atom(s->part->component);
    detail::atom_validate(c, s->part->payload);
    if (detail::atom_is_top(c, s->part->payload))
      throw encoding_error("non-canonical sum element: payload is the "
                           "component top");
  }

  Ordering cmp(const Element& x, const Element& y) const {
    validate(x);
    validate(y);
    return cmp_u(x, y);
  }

  bool leq(const Element& x, const Element& y) const {
    return cmp(x, y) != Ordering::GT;
  }
  bool is_top(const Element& x) const {
    return cmp(x, top()) == Ordering::EQ;
  }
  bool is_bottom(const Element& x) const {
    return cmp(x, bottom()) == Ordering::EQ;
  }

  Element mul(const Element& x, const Element& y) const {
    validate(x);
    validate(y);
    return mul_u(x, y);
  }

  Element imp(const Element& x, const Element& y) const {
    validate(x);
    validate(y);
    return imp_u(x, y);
  }

  Element meet(const Element& x, const Element& y) const {
    validate(x);
    validate(y);
    return cmp_u(x, y) != Ordering::GT ? x : y;
  }
  Element join(const Element& x, const Element& y) const {
    validate(x);
    validate(y);
    return cmp_u(x, y) != Ordering::GT ? y : x;
  }

  Element neg(const Element& x) const {
    require_bounded("negation");
    validate(x);
    return neg_u(x);
  }

  Element oplus(const Element& x, const Element& y) const {
    require_bounded("oplus");
    validate(x);
    validate(y);
    return oplus_u(x, y);
  }

  /// The strong-disjunction operation definable in every BL-chain from
  /// *, => and the lattice meet; total even on unbounded hoops.
  Element uplus(const Element& x, const Element& y) const {
    validate(x);
    validate(y);
    return uplus_u(x, y);
  }

  Element power(const Element& x, std::uint64_t n) const {
    if (n == 0) throw argument_error("power requires n >= 1");
    validate(x);
    Element acc = x;
    for (std::uint64_t i = 1; i < n; ++i) acc = mul_u(acc, x);
    return acc;
  }

  Element nfold_oplus(const Element& x, std::uint64_t n) const {
    if (n == 0) throw argument_error("nfold_oplus requires n >= 1");
    require_bounded("oplus");
    validate(x);
    Element acc = x;
    for (std::uint64_t i = 1; i < n; ++i) acc = oplus_u(acc, x);
    return acc;
  }

  Element nfold_uplus(const Element& x, std::uint64_t n) const {
    if (n == 0) throw argument_error("nfold_uplus requires n >= 1");
    validate(x);
    Element acc = x;
    for (std::uint64_t i = 1; i < n; ++i) acc = uplus_u(acc, x);
    return acc;
  }

  /// Least n with x^n = bottom. Decided exactly on Chang, rotation and
  /// upper ordinal-sum components; elsewhere iterated up to the cutoff
  /// (a nonzero fixed point still decides infinity exactly).
  Ord ord(const Element& x, std::uint64_t cutoff = 64) const {
    require_bounded("ord");
    if (cutoff == 0) throw argument_error("ord requires cutoff >= 1");
    validate(x);
    if (!is_sum_) return detail::atom_ord(comps_[0], as_atom(x), cutoff);
    const SumElem& s = std::get<SumElem>(x);
    if (s.is_top()) return Ord::inf();
    if (s.part->component > 0) return Ord::inf();  // powers stay above 0
    return detail::atom_ord(comps_[0], s.part->payload, cutoff);
  }

  /// True iff exactly one of ord(x), ord(~x) is finite.
  bool perfect_condition(const Element& x, std::uint64_t cutoff = 64) const {
    Ord ox = ord(x, cutoff);
    Ord on = ord(neg(x), cutoff);
    return ox.is_finite() != on.is_finite();
  }

  /// Membership in the co-infinitesimal part: x > x => bottom.
  bool positive_part(const Element& x) const {
    require_bounded("positive_part");
    validate(x);
    return cmp_u(x, neg_u(x)) == Ordering::GT;
  }

  /// Canonical sum element: a payload equal to the component top is the
  /// shared top of the whole sum.
  Element sum_element(std::size_t component, const AtomElem& payload) const {
    if (!is_sum_) throw encoding_error("not an ordinal sum");
    if (!omega_ && component >= comps_.size())
      throw encoding_error("component index out of range");
    const Descriptor& c = component_atom(component);
    detail::atom_validate(c, payload);
    if (detail::atom_is_top(c, payload)) return Element(SumElem::top());
    return Element(SumElem::at(component, payload));
  }

  Element parse_element(std::string_view text) const;

 private:
  static constexpr std::size_t kOmegaWindow = 5;

  Descriptor original_;
  std::string name_;
  bool is_sum_ = false;
  bool omega_ = false;
  bool bounded_ = true;
  std::vector<Descriptor> comps_;
  Element top_e_;
  std::optional<Element> bottom_e_;

  explicit Chain(const Descriptor& d) : original_(d), name_(render(d)) {
    normalize(d);
    if (is_sum_ || omega_) {
      if (comps_.empty())
        throw construction_error("ordinal sum needs at least one component");
      if (!detail::atom_bounded(comps_[0]))
        throw construction_error(
            "ordinal sum requires a bounded first component");
      bounded_ = true;
    } else {
      bounded_ = detail::atom_bounded(comps_[0]);
    }
    if (is_sum_) {
      top_e_ = Element(SumElem::top());
      bottom_e_ = Element(SumElem::at(0, detail::atom_bottom(comps_[0])));
    } else {
      top_e_ = to_element(detail::atom_top(comps_[0]));
      if (bounded_) bottom_e_ = to_element(detail::atom_bottom(comps_[0]));
    }
  }

  Ordering cmp_u(const Element& x, const Element& y) const {
    if (!is_sum_) return detail::atom_cmp(comps_[0], as_atom(x), as_atom(y));
    const SumElem& a = std::get<SumElem>(x);
    const SumElem& b = std::get<SumElem>(y);
    if (a.is_top() && b.is_top()) return Ordering::EQ;
    if (a.is_top()) return Ordering::GT;
    if (b.is_top()) return Ordering::LT;
    if (a.part->component != b.part->component)
      return a.part->component < b.part->component ? Ordering::LT
                                                   : Ordering::GT;
    return detail::atom_cmp(component_atom(a.part->component),
                            a.part->payload, b.part->payload);
  }

  Element wrap_sum(std::size_t component, AtomElem payload) const {
    if (detail::atom_is_top(component_atom(component), payload))
      return top_e_;
    return Element(SumElem::at(component, std::move(payload)));
  }

  Element mul_u(const Element& x, const Element& y) const {
    if (!is_sum_)
      return to_element(detail::atom_mul(comps_[0], as_atom(x), as_atom(y)));
    const SumElem& a = std::get<SumElem>(x);
    const SumElem& b = std::get<SumElem>(y);
    if (a.is_top()) return y;
    if (b.is_top()) return x;
    std::size_t i = a.part->component, j = b.part->component;
    if (i == j)
      return wrap_sum(i, detail::atom_mul(component_atom(i), a.part->payload,
                                          b.part->payload));
    return i < j ? x : y;  // lower non-top component absorbs
  }

  Element imp_u(const Element& x, const Element& y) const {
    if (!is_sum_)
      return to_element(detail::atom_imp(comps_[0], as_atom(x), as_atom(y)));
    const SumElem& a = std::get<SumElem>(x);
    const SumElem& b = std::get<SumElem>(y);
    if (a.is_top()) return y;
    if (b.is_top()) return top_e_;
    std::size_t i = a.part->component, j = b.part->component;
    if (i == j)
      return wrap_sum(i, detail::atom_imp(component_atom(i), a.part->payload,
                                          b.part->payload));
    return i > j ? y : top_e_;
  }

  Element neg_u(const Element& x) const { return imp_u(x, *bottom_e_); }

  Element oplus_u(const Element& x, const Element& y) const {
    return neg_u(mul_u(neg_u(x), neg_u(y)));
  }

  Element uplus_u(const Element& x, const Element& y) const {
    Element xy = mul_u(x, y);
    Element left = imp_u(imp_u(x, xy), y);
    Element right = imp_u(imp_u(y, xy), x);
    return cmp_u(left, right) != Ordering::GT ? left : right;
  }

  void normalize(const Descriptor& d) {
    using K = Descriptor::Kind;
    switch (d.kind) {
      case K::finite_godel:
      case K::finite_mv:
        if (d.size < 2)
          throw construction_error("finite chain needs at least 2 elements");
        comps_.push_back(d);
        return;
      case K::standard_mv:
      case K::standard_godel:
      case K::cancellative:
      case K::chang:
        comps_.push_back(d);
        return;
      case K::rotation:
        if (d.components.size() != 1 ||
            d.components[0].kind != K::cancellative)
          throw construction_error(
              "rotation is only defined over a cancellative hoop");
        comps_.push_back(d);
        return;
      case K::standard_product:
        // Realized as the two-element chain stacked under the standard
        // cancellative hoop.
        is_sum_ = true;
        comps_.push_back(Descriptor::finite_mv(2));
        comps_.push_back(Descriptor::cancellative());
        return;
      case K::ordinal_sum: {
        is_sum_ = true;
        for (const auto& part : d.components) splice(part);
        if (comps_.size() == 1 && !omega_) {
          // A one-component sum is that component.
          is_sum_ = false;
        }
        return;
      }
      case K::omega_sum: {
        if (d.components.size() != 1)
          throw construction_error("omega sum takes one component");
        Chain inner(d.components[0]);
        if (inner.is_sum_)
          throw construction_error(
              "omega sum of a composite chain is not supported");
        if (!inner.bounded_)
          throw construction_error(
              "omega sum requires a bounded component");
        is_sum_ = true;
        omega_ = true;
        comps_.push_back(inner.comps_[0]);
        return;
      }
    }
    throw construction_error("unknown descriptor");
  }

  void splice(const Descriptor& part) {
    using K = Descriptor::Kind;
    if (part.kind == K::omega_sum)
      throw construction_error(
          "omega sums may not appear inside an ordinal sum");
    Chain inner(part);
    if (inner.omega_)
      throw construction_error(
          "omega sums may not appear inside an ordinal sum");
    for (auto& c : inner.comps_) comps_.push_back(c);
  }

  const AtomElem as_atom(const Element& x) const {
    struct Conv {
      AtomElem operator()(const Rational& q) const { return q; }
      AtomElem operator()(const ChangElem& c) const { return c; }
      AtomElem operator()(const RotElem& r) const { return r; }
      AtomElem operator()(const SumElem&) const {
        throw encoding_error("ordinal-sum element on a plain chain");
      }
    };
    return std::visit(Conv{}, x);
  }

  void require_bounded(const char* what) const {
    if (!bounded_)
      throw unsupported_operation(std::string(what) +
                                  " is undefined on an unbounded hoop");
  }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

inline AtomElem parse_atom_elem(const Descriptor& d, std::string_view text) {
  using K = Descriptor::Kind;
  text = trim(text);
  if (text.empty()) throw parse_error("empty element", 0, "element");
  switch (d.kind) {
    case K::chang: {
      if (text == "0") return ChangElem::b(0);
      if (text == "1") return ChangElem::a(0);
      char side = text[0];
      if (side != 'a' && side != 'b')
        throw parse_error("bad Chang element '" + std::string(text) + "'", 0,
                          "a<n> or b<n>");
      std::uint64_t idx = 0;
      if (text.size() == 1)
        throw parse_error("bad Chang element", 1, "index");
      for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
          throw parse_error("bad Chang element '" + std::string(text) + "'",
                            i, "digit");
        idx = idx * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (idx > 1000000000000ull)
          throw parse_error("Chang index too large", i, "index <= 10^12");
      }
      return side == 'a' ? ChangElem::a(idx) : ChangElem::b(idx);
    }
    case K::rotation: {
      if (text == "0") return RotElem::neg(Rational::one());
      if (text == "1") return RotElem::pos(Rational::one());
      bool positive;
      if (text.substr(0, 3) == "pos") positive = true;
      else if (text.substr(0, 3) == "neg") positive = false;
      else
        throw parse_error("bad rotation element '" + std::string(text) + "'",
                          0, "pos <q> or neg <q>");
      std::string_view rest = text.substr(3);
      if (!rest.empty() && (rest[0] == ':' || rest[0] == ' '))
        rest.remove_prefix(1);
      return positive ? RotElem::pos(Rational::parse(trim(rest)))
                      : RotElem::neg(Rational::parse(trim(rest)));
    }
    default:
      return Rational::parse(text);
  }
}

}  // namespace detail

inline Element Chain::parse_element(std::string_view text) const {
  text = detail::trim(text);
  Element result = top();
  if (!is_sum_) {
    if (text == "1")
      result = top();
    else if (text == "0" && bounded_)
      result = bottom();
    else
      result = to_element(detail::parse_atom_elem(comps_[0], text));
  } else {
    if (text == "1" || text == "top") {
      result = top();
    } else if (text == "0") {
      result = bottom();
    } else {
      if (text.empty() || text[0] != 'c')
        throw parse_error("bad sum element '" + std::string(text) + "'", 0,
                          "c<i>:<payload>, 0 or 1");
      std::size_t i = 1;
      std::size_t comp = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        comp = comp * 10 + static_cast<std::size_t>(text[i] - '0');
        if (comp > 1000000000)
          throw parse_error("component index too large", i, "index <= 10^9");
        ++i;
      }
      if (i == 1 || i >= text.size() || text[i] != ':')
        throw parse_error("bad sum element '" + std::string(text) + "'", i,
                          "c<i>:<payload>");
      if (!omega_ && comp >= comps_.size())
        throw encoding_error("component index " + std::to_string(comp) +
                             " out of range");
      AtomElem payload =
          detail::parse_atom_elem(component_atom(comp), text.substr(i + 1));
      result = sum_element(comp, payload);
    }
  }
  validate(result);
  return result;
}

}  // namespace blc

#endif
