#ifndef BLC_TEST_HELPERS_HPP
#define BLC_TEST_HELPERS_HPP

#include <string>
#include <vector>

#include "blc/chain.hpp"
#include "blc/sources.hpp"

namespace blc::test {

inline Element rat(long p, long q = 1) { return Element(Rational(p, q)); }
inline Element ca(std::uint64_t n) { return Element(ChangElem::a(n)); }
inline Element cb(std::uint64_t n) { return Element(ChangElem::b(n)); }
inline Element rpos(long p, long q = 1) {
  return Element(RotElem::pos(Rational(p, q)));
}
inline Element rneg(long p, long q = 1) {
  return Element(RotElem::neg(Rational(p, q)));
}
inline Element at(const Chain& c, std::size_t comp, const Element& payload) {
  struct ToAtom {
    AtomElem operator()(const Rational& q) const { return q; }
    AtomElem operator()(const ChangElem& x) const { return x; }
    AtomElem operator()(const RotElem& x) const { return x; }
    AtomElem operator()(const SumElem&) const {
      throw encoding_error("nested sum payload");
    }
  };
  return c.sum_element(comp, std::visit(ToAtom{}, payload));
}

inline bool eq(const Chain& c, const Element& x, const Element& y) {
  return c.cmp(x, y) == Ordering::EQ;
}

/// Runs fn over `count` deterministic pseudo-random tuples.
template <std::size_t N, typename F>
void for_random_tuples(const Chain& c, std::size_t count, std::uint64_t seed,
                       unsigned bound, F&& fn) {
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::array<Element, N> tuple;
    for (auto& e : tuple) e = random_element(c, rng, bound);
    fn(tuple);
  }
}

inline std::vector<std::string> all_descriptors() {
  return {"G(5)",  "MV(6)", "LukStd",      "GodStd", "ProdStd",
          "Canc",  "C",     "V",           "C ++ LukStd", "omega*V"};
}

}  // namespace blc::test

#endif
