#ifndef BLC_ELEMENT_HPP
#define BLC_ELEMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "blc/rational.hpp"

namespace blc {

enum class Ordering { LT, EQ, GT };

/// Element of Chang's chain: b_n (infinitesimals, side B) below every
/// a_n (co-infinitesimals, side A); a_0 is the top, b_0 the bottom.
struct ChangElem {
  enum class Side : std::uint8_t { B, A };
  Side side = Side::B;
  std::uint64_t index = 0;

  static ChangElem a(std::uint64_t n) { return {Side::A, n}; }
  static ChangElem b(std::uint64_t n) { return {Side::B, n}; }

  friend bool operator==(const ChangElem&, const ChangElem&) = default;
};

inline Ordering cmp(const ChangElem& x, const ChangElem& y) {
  if (x.side != y.side)
    return x.side == ChangElem::Side::B ? Ordering::LT : Ordering::GT;
  if (x.index == y.index) return Ordering::EQ;
  // b_n < b_m iff n < m, but a_n < a_m iff n > m.
  bool lt = x.side == ChangElem::Side::B ? x.index < y.index
                                         : x.index > y.index;
  return lt ? Ordering::LT : Ordering::GT;
}

/// Element of a disconnected rotation: the positive copy keeps the hoop
/// order, the negative copy sits below it with the order reversed.
/// top = pos(1), bottom = neg(1); values range over (0,1].
struct RotElem {
  bool positive = true;
  Rational value = Rational::one();

  static RotElem pos(Rational q) { return {true, std::move(q)}; }
  static RotElem neg(Rational q) { return {false, std::move(q)}; }

  friend bool operator==(const RotElem&, const RotElem&) = default;
};

inline Ordering cmp(const RotElem& x, const RotElem& y) {
  if (x.positive != y.positive)
    return x.positive ? Ordering::GT : Ordering::LT;
  if (x.value == y.value) return Ordering::EQ;
  bool lt = x.positive ? x.value < y.value : x.value > y.value;
  return lt ? Ordering::LT : Ordering::GT;
}

/// Payload of one ordinal-sum component; components are always atomic
/// chains (nested sums are flattened at construction).
using AtomElem = std::variant<Rational, ChangElem, RotElem>;

/// Element of an ordinal sum: either the shared top, or a pair of
/// component index and local element. Canonical form never stores a
/// component's local top (it is the shared top).
struct SumElem {
  struct Part {
    std::size_t component = 0;
    AtomElem payload;
    friend bool operator==(const Part&, const Part&) = default;
  };
  std::optional<Part> part;  // nullopt = top

  bool is_top() const { return !part.has_value(); }
  static SumElem top() { return {}; }
  static SumElem at(std::size_t component, AtomElem payload) {
    return {Part{component, std::move(payload)}};
  }

  friend bool operator==(const SumElem&, const SumElem&) = default;
};

using Element = std::variant<Rational, ChangElem, RotElem, SumElem>;

inline Element to_element(const AtomElem& a) {
  return std::visit([](const auto& v) { return Element(v); }, a);
}

/// Canonical text form, context-free: "2/5", "a3", "pos 1/8", "c1:2/5",
/// sum top prints as "1".
inline std::string render(const Element& e);

inline std::string render(const AtomElem& a) {
  return render(to_element(a));
}

inline std::string render(const Element& e) {
  struct Printer {
    std::string operator()(const Rational& q) const { return q.str(); }
    std::string operator()(const ChangElem& c) const {
      return (c.side == ChangElem::Side::A ? "a" : "b") +
             std::to_string(c.index);
    }
    std::string operator()(const RotElem& r) const {
      return (r.positive ? "pos " : "neg ") + r.value.str();
    }
    std::string operator()(const SumElem& s) const {
      if (s.is_top()) return "1";
      return "c" + std::to_string(s.part->component) + ":" +
             render(s.part->payload);
    }
  };
  return std::visit(Printer{}, e);
}

}  // namespace blc

#endif
