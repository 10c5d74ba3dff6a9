#ifndef BLC_SOURCES_HPP
#define BLC_SOURCES_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "blc/chain.hpp"
#include "blc/valuation.hpp"

namespace blc {

/// Deterministic 64-bit generator (splitmix64); all "random" sampling in
/// the library flows through this so runs are reproducible bit for bit.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

namespace detail {

/// Fractions with denominator <= d in [0,1], enumerated by (denominator,
/// numerator); this is also the counterexample tie-break order.
inline void farey_into(unsigned d, bool include_zero,
                       std::vector<Rational>& out) {
  if (d == 0) d = 1;
  if (include_zero) out.push_back(Rational::zero());
  out.push_back(Rational::one());
  for (unsigned q = 2; q <= d; ++q)
    for (unsigned p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1)
        out.push_back(Rational(static_cast<long>(p), static_cast<long>(q)));
}

inline std::vector<AtomElem> atom_grid_pool(const Descriptor& desc,
                                            unsigned d) {
  using K = Descriptor::Kind;
  std::vector<AtomElem> out;
  switch (desc.kind) {
    case K::finite_godel:
    case K::finite_mv:
      return atom_carrier(desc);
    case K::standard_mv:
    case K::standard_godel: {
      std::vector<Rational> qs;
      farey_into(d, true, qs);
      for (auto& q : qs) out.push_back(q);
      return out;
    }
    case K::cancellative: {
      std::vector<Rational> qs;
      farey_into(d, false, qs);
      for (auto& q : qs) out.push_back(q);
      return out;
    }
    case K::chang:
      for (unsigned i = 0; i <= d; ++i) {
        out.push_back(ChangElem::b(i));
        out.push_back(ChangElem::a(i));
      }
      return out;
    case K::rotation: {
      std::vector<Rational> qs;
      farey_into(d, false, qs);
      for (auto& q : qs) {
        out.push_back(RotElem::neg(q));
        out.push_back(RotElem::pos(q));
      }
      return out;
    }
    default:
      throw strategy_error("no grid pool for this chain");
  }
}

inline AtomElem random_atom(const Descriptor& desc, SplitMix64& rng,
                            unsigned bound) {
  using K = Descriptor::Kind;
  if (bound == 0) bound = 1;
  switch (desc.kind) {
    case K::finite_godel:
    case K::finite_mv: {
      long k = static_cast<long>(desc.size);
      return Rational(static_cast<long>(rng.below(desc.size)), k - 1);
    }
    case K::standard_mv:
    case K::standard_godel: {
      unsigned long q = 1 + rng.below(bound);
      unsigned long p = rng.below(q + 1);
      return Rational(static_cast<long>(p), static_cast<long>(q));
    }
    case K::cancellative: {
      unsigned long q = 1 + rng.below(bound);
      unsigned long p = 1 + rng.below(q);
      return Rational(static_cast<long>(p), static_cast<long>(q));
    }
    case K::chang: {
      bool a_side = rng.below(2) == 1;
      std::uint64_t idx = rng.below(bound + 1);
      return a_side ? ChangElem::a(idx) : ChangElem::b(idx);
    }
    case K::rotation: {
      bool positive = rng.below(2) == 1;
      unsigned long q = 1 + rng.below(bound);
      unsigned long p = 1 + rng.below(q);
      Rational v(static_cast<long>(p), static_cast<long>(q));
      return positive ? RotElem::pos(v) : RotElem::neg(v);
    }
    default:
      throw strategy_error("no random sampler for this chain");
  }
}

}  // namespace detail

/// Deterministic element pool of a chain with grid resolution d, in the
/// counterexample tie-break order. Finite chains return their carrier.
/// Ordinal sums list components left to right (omega sums truncated to
/// the sampling window) and put the shared top last.
inline std::vector<Element> grid_pool(const Chain& c, unsigned d) {
  if (c.finite()) return c.carrier();
  std::vector<Element> out;
  if (!c.is_sum()) {
    for (auto& a : detail::atom_grid_pool(c.descriptor_atom(), d))
      out.push_back(to_element(a));
    return out;
  }
  for (std::size_t i = 0; i < c.component_window(); ++i) {
    const Descriptor& comp = c.component_atom(i);
    for (auto& a : detail::atom_grid_pool(comp, d))
      if (!detail::atom_is_top(comp, a))
        out.push_back(Element(SumElem::at(i, a)));
  }
  out.push_back(Element(SumElem::top()));
  return out;
}

/// Deterministic pseudo-random element; `bound` caps denominators on
/// rational chains and indices on Chang.
inline Element random_element(const Chain& c, SplitMix64& rng,
                              unsigned bound) {
  if (!c.is_sum())
    return to_element(detail::random_atom(c.descriptor_atom(), rng, bound));
  std::size_t w = c.component_window();
  std::uint64_t roll = rng.below(8 * w + 1);
  if (roll == 8 * w) return Element(SumElem::top());
  std::size_t comp = static_cast<std::size_t>(roll % w);
  const Descriptor& atom = c.component_atom(comp);
  for (int tries = 0; tries < 10000; ++tries) {
    AtomElem a = detail::random_atom(atom, rng, bound);
    if (!detail::atom_is_top(atom, a)) return Element(SumElem::at(comp, a));
  }
  throw strategy_error("random sampling failed to avoid the component top");
}

/// Recipe for generating valuations over a chain. Deterministic given
/// its parameters; the enumeration order defines which counterexample a
/// check reports first.
class ValuationSource {
 public:
  enum class Kind { exhaustive, grid, random, chang_indices, mixed, probes };

  static ValuationSource Exhaustive() { return ValuationSource(Kind::exhaustive); }
  static ValuationSource Grid(unsigned denom_bound) {
    ValuationSource s(Kind::grid);
    s.bound_ = denom_bound;
    return s;
  }
  static ValuationSource Random(std::size_t count, std::uint64_t seed,
                                unsigned denom_bound) {
    ValuationSource s(Kind::random);
    s.count_ = count;
    s.seed_ = seed;
    s.bound_ = denom_bound;
    return s;
  }
  static ValuationSource ChangIndices(unsigned index_bound) {
    ValuationSource s(Kind::chang_indices);
    s.bound_ = index_bound;
    return s;
  }
  static ValuationSource Mixed(std::vector<ValuationSource> parts) {
    ValuationSource s(Kind::mixed);
    s.parts_ = std::move(parts);
    return s;
  }
  static ValuationSource Probes(std::vector<Valuation> probes) {
    ValuationSource s(Kind::probes);
    s.probes_ = std::move(probes);
    return s;
  }

  Kind kind() const { return kind_; }

  std::string describe() const {
    switch (kind_) {
      case Kind::exhaustive: return "exhaustive";
      case Kind::grid: return "grid(" + std::to_string(bound_) + ")";
      case Kind::random: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "0x%llx",
                      static_cast<unsigned long long>(seed_));
        return "random(" + std::to_string(count_) + ",seed=" + buf +
               ",bound=" + std::to_string(bound_) + ")";
      }
      case Kind::chang_indices:
        return "chang-indices(" + std::to_string(bound_) + ")";
      case Kind::mixed: {
        std::string out;
        for (const auto& p : parts_) {
          if (!out.empty()) out += "+";
          out += p.describe();
        }
        return out;
      }
      case Kind::probes: return "probes(" + std::to_string(probes_.size()) + ")";
    }
    return "?";
  }

  /// Visits valuations over `vars` in order; `fn` returns false to stop.
  /// Returns the number of valuations visited.
  std::size_t for_each(const Chain& c, const std::vector<std::string>& vars,
                       const std::function<bool(const Valuation&)>& fn) const {
    std::size_t visited = 0;
    visit(c, vars, fn, visited);
    return visited;
  }

 private:
  explicit ValuationSource(Kind k) : kind_(k) {}

  Kind kind_;
  unsigned bound_ = 0;
  std::size_t count_ = 0;
  std::uint64_t seed_ = 0;
  std::vector<ValuationSource> parts_;
  std::vector<Valuation> probes_;

  // Returns false if the visitor asked to stop.
  bool visit(const Chain& c, const std::vector<std::string>& vars,
             const std::function<bool(const Valuation&)>& fn,
             std::size_t& visited) const {
    switch (kind_) {
      case Kind::exhaustive: {
        if (!c.finite())
          throw strategy_error(
              "exhaustive source requires a finite chain");
        return odometer(c.carrier(), vars, fn, visited);
      }
      case Kind::grid:
        return odometer(grid_pool(c, bound_), vars, fn, visited);
      case Kind::chang_indices: {
        if (c.is_sum() ||
            c.descriptor_atom().kind != Descriptor::Kind::chang)
          throw strategy_error("chang-indices source requires Chang's chain");
        std::vector<Element> pool;
        for (unsigned i = 0; i <= bound_; ++i) {
          pool.push_back(Element(ChangElem::b(i)));
          pool.push_back(Element(ChangElem::a(i)));
        }
        return odometer(pool, vars, fn, visited);
      }
      case Kind::random: {
        SplitMix64 rng(seed_);
        Valuation v;
        std::vector<std::map<std::string, Element>::iterator> slots;
        for (const auto& name : vars)
          slots.push_back(
              v.assignments.emplace(name, Element(Rational::zero())).first);
        for (std::size_t i = 0; i < count_; ++i) {
          for (std::size_t k = 0; k < vars.size(); ++k)
            slots[k]->second = random_element(c, rng, bound_);
          ++visited;
          if (!fn(v)) return false;
        }
        return true;
      }
      case Kind::mixed: {
        for (const auto& p : parts_)
          if (!p.visit(c, vars, fn, visited)) return false;
        return true;
      }
      case Kind::probes: {
        for (const auto& v : probes_) {
          for (const auto& name : vars)
            if (!v.has(name))
              throw strategy_error("probe valuation misses variable '" +
                                   name + "'");
          ++visited;
          if (!fn(v)) return false;
        }
        return true;
      }
    }
    return true;
  }

  // Full cross product, first variable varying slowest (lexicographic in
  // the declared variable order).
  static bool odometer(const std::vector<Element>& pool,
                       const std::vector<std::string>& vars,
                       const std::function<bool(const Valuation&)>& fn,
                       std::size_t& visited) {
    if (pool.empty()) return true;
    if (vars.empty()) {
      ++visited;
      return fn(Valuation{});
    }
    Valuation v;
    std::vector<std::map<std::string, Element>::iterator> slots;
    for (const auto& name : vars)
      slots.push_back(v.assignments.emplace(name, pool[0]).first);
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < vars.size(); ++i)
        slots[i]->second = pool[idx[i]];
      ++visited;
      if (!fn(v)) return false;
      std::size_t i = vars.size();
      while (i > 0) {
        --i;
        if (++idx[i] < pool.size()) break;
        idx[i] = 0;
        if (i == 0) return true;
      }
    }
  }
};

}  // namespace blc

#endif
