#ifndef BLC_EMBEDDING_HPP
#define BLC_EMBEDDING_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "blc/chain.hpp"
#include "blc/sources.hpp"

namespace blc {

/// Finite fragment of a chain. A table entry is defined exactly when the
/// true result lies inside the carrier; embeddability verdicts depend on
/// this convention, so it is fixed here. Only the * and => tables are
/// kept (meet and join follow from the order on chains).
struct PartialAlgebra {
  Chain source;
  std::vector<Element> carrier;  // ascending, pairwise distinct
  std::vector<std::vector<std::optional<std::size_t>>> mul_table;
  std::vector<std::vector<std::optional<std::size_t>>> imp_table;
  std::optional<std::size_t> bottom_index;  // set iff source bottom in carrier
  std::optional<std::size_t> top_index;     // set iff source top in carrier

  std::size_t size() const { return carrier.size(); }

  std::optional<std::size_t> index_of(const Element& e) const {
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (source.cmp(carrier[i], e) == Ordering::EQ) return i;
    return std::nullopt;
  }
};

inline PartialAlgebra partial_subalgebra(const Chain& c,
                                         std::vector<Element> elements) {
  for (const auto& e : elements) c.validate(e);
  std::sort(elements.begin(), elements.end(),
            [&](const Element& a, const Element& b) {
              return c.cmp(a, b) == Ordering::LT;
            });
  for (std::size_t i = 0; i + 1 < elements.size(); ++i)
    if (c.cmp(elements[i], elements[i + 1]) == Ordering::EQ)
      throw argument_error("carrier elements must be pairwise distinct");
  PartialAlgebra p{c, std::move(elements), {}, {}, {}, {}};
  std::size_t n = p.carrier.size();
  p.mul_table.assign(n, std::vector<std::optional<std::size_t>>(n));
  p.imp_table.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      p.mul_table[i][j] = p.index_of(c.mul(p.carrier[i], p.carrier[j]));
      p.imp_table[i][j] = p.index_of(c.imp(p.carrier[i], p.carrier[j]));
    }
  }
  if (c.bounded()) p.bottom_index = p.index_of(c.bottom());
  p.top_index = p.index_of(c.top());
  return p;
}

/// Injective, order- and operation-preserving assignment of target
/// elements to the carrier (parallel to PartialAlgebra::carrier).
struct EmbeddingMap {
  std::vector<Element> image;

  std::string str(const PartialAlgebra& p) const {
    std::string out;
    for (std::size_t i = 0; i < image.size() && i < p.carrier.size(); ++i) {
      if (!out.empty()) out += "; ";
      out += render(p.carrier[i]) + " -> " + render(image[i]);
    }
    return out;
  }
};

struct EmbeddingCheck {
  bool ok = true;
  std::string violation;

  explicit operator bool() const { return ok; }
};

inline EmbeddingCheck check_embedding(const EmbeddingMap& m,
                                      const PartialAlgebra& p,
                                      const Chain& target) {
  auto fail = [](std::string why) { return EmbeddingCheck{false, std::move(why)}; };
  std::size_t n = p.size();
  if (m.image.size() != n) return fail("map is not total on the carrier");
  for (const auto& e : m.image) {
    try {
      target.validate(e);
    } catch (const encoding_error& err) {
      return fail(std::string("image not in target: ") + err.what());
    }
  }
  // carrier ascending, so adjacent strict order gives injectivity too
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (target.cmp(m.image[i], m.image[i + 1]) != Ordering::LT)
      return fail("order violated between " + render(p.carrier[i]) + " and " +
                  render(p.carrier[i + 1]));
  if (p.bottom_index) {
    if (!target.bounded())
      return fail("carrier contains 0 but the target is unbounded");
    if (target.cmp(m.image[*p.bottom_index], target.bottom()) != Ordering::EQ)
      return fail("bottom is not mapped to the target bottom");
  }
  if (p.top_index &&
      target.cmp(m.image[*p.top_index], target.top()) != Ordering::EQ)
    return fail("top is not mapped to the target top");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (p.mul_table[i][j]) {
        Element got = target.mul(m.image[i], m.image[j]);
        if (target.cmp(got, m.image[*p.mul_table[i][j]]) != Ordering::EQ)
          return fail("* not preserved at (" + render(p.carrier[i]) + ", " +
                      render(p.carrier[j]) + ")");
      }
      if (p.imp_table[i][j]) {
        Element got = target.imp(m.image[i], m.image[j]);
        if (target.cmp(got, m.image[*p.imp_table[i][j]]) != Ordering::EQ)
          return fail("=> not preserved at (" + render(p.carrier[i]) + ", " +
                      render(p.carrier[j]) + ")");
      }
    }
  }
  return {};
}

/// Candidate grid for the backtracking search. On finite targets the
/// whole carrier is used and a failed search is a decision; on infinite
/// targets the grid is an explicit budget and a failed search only means
/// "not found up to this budget".
struct EmbeddingBudget {
  unsigned denom_bound = 16;  // rational payload denominators
  unsigned index_bound = 16;  // Chang payload indices
};

namespace detail {

inline std::vector<Element> candidate_pool(const Chain& target,
                                           const EmbeddingBudget& budget) {
  std::vector<Element> pool;
  if (target.finite()) {
    pool = target.carrier();
  } else {
    unsigned d = budget.denom_bound;
    if (!target.is_sum() &&
        target.descriptor_atom().kind == Descriptor::Kind::chang)
      d = budget.index_bound;
    else if (target.is_sum())
      d = std::max(budget.denom_bound, budget.index_bound);
    pool = grid_pool(target, d);
  }
  std::sort(pool.begin(), pool.end(),
            [&](const Element& a, const Element& b) {
              return target.cmp(a, b) == Ordering::LT;
            });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [&](const Element& a, const Element& b) {
                           return target.cmp(a, b) == Ordering::EQ;
                         }),
             pool.end());
  return pool;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const PartialAlgebra& p, const Chain& target,
                  const EmbeddingBudget& budget)
      : p_(p), target_(target), pool_(candidate_pool(target, budget)) {
    std::size_t n = p_.size();
    image_.assign(n, std::nullopt);
    // Assignment order: pinned endpoints first, then from the top down;
    // Chang-like fragments then force everything from few free choices.
    if (p_.bottom_index) order_.push_back(*p_.bottom_index);
    if (p_.top_index && p_.top_index != p_.bottom_index)
      order_.push_back(*p_.top_index);
    for (std::size_t k = n; k-- > 0;)
      if (std::find(order_.begin(), order_.end(), k) == order_.end())
        order_.push_back(k);
  }

  std::optional<EmbeddingMap> run() {
    if (p_.bottom_index && !target_.bounded()) return std::nullopt;
    if (search(0)) {
      EmbeddingMap m;
      for (auto& e : image_) m.image.push_back(*e);
      if (!check_embedding(m, p_, target_))
        throw error("internal: search returned a non-embedding");
      return m;
    }
    return std::nullopt;
  }

 private:
  const PartialAlgebra& p_;
  const Chain& target_;
  std::vector<Element> pool_;
  std::vector<std::optional<Element>> image_;
  std::vector<std::size_t> order_;

  bool consistent_so_far() const {
    std::size_t n = p_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!image_[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!image_[j]) continue;
        auto check = [&](const std::optional<std::size_t>& entry,
                         bool is_mul) {
          if (!entry || !image_[*entry]) return true;
          Element got = is_mul ? target_.mul(*image_[i], *image_[j])
                               : target_.imp(*image_[i], *image_[j]);
          return target_.cmp(got, *image_[*entry]) == Ordering::EQ;
        };
        if (!check(p_.mul_table[i][j], true)) return false;
        if (!check(p_.imp_table[i][j], false)) return false;
      }
    }
    return true;
  }

  bool order_ok(std::size_t k, const Element& value) const {
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (!image_[i] || i == k) continue;
      Ordering want = i < k ? Ordering::LT : Ordering::GT;
      if (target_.cmp(*image_[i], value) != want) return false;
    }
    return true;
  }

  // A defined entry with both arguments assigned forces the image of its
  // result.
  std::optional<Element> forced_value(std::size_t k) const {
    if (p_.bottom_index && k == *p_.bottom_index)
      return target_.bottom();
    if (p_.top_index && k == *p_.top_index) return target_.top();
    std::size_t n = p_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!image_[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!image_[j]) continue;
        if (p_.mul_table[i][j] == k)
          return target_.mul(*image_[i], *image_[j]);
        if (p_.imp_table[i][j] == k)
          return target_.imp(*image_[i], *image_[j]);
      }
    }
    return std::nullopt;
  }

  bool try_value(std::size_t pos, std::size_t k, const Element& value) {
    if (!order_ok(k, value)) return false;
    image_[k] = value;
    bool ok = consistent_so_far() && search(pos + 1);
    if (!ok) image_[k] = std::nullopt;
    return ok;
  }

  bool search(std::size_t pos) {
    if (pos == order_.size()) return true;
    std::size_t k = order_[pos];
    if (auto forced = forced_value(k)) {
      try {
        target_.validate(*forced);
      } catch (const encoding_error&) {
        return false;
      }
      return try_value(pos, k, *forced);
    }
    for (const Element& cand : pool_)
      if (try_value(pos, k, cand)) return true;
    return false;
  }
};

}  // namespace detail

/// Backtracking search for an embedding of the fragment into the target.
/// Deterministic: candidates are tried in ascending target order, so the
/// first found map is always the same. std::nullopt means "not found up
/// to this budget" and does not refute embeddability (except for finite
/// targets, where the grid is the whole carrier and the answer is
/// final).
inline std::optional<EmbeddingMap> find_embedding(
    const PartialAlgebra& p, const Chain& target,
    const EmbeddingBudget& budget = {}) {
  return detail::EmbeddingSearch(p, target, budget).run();
}

/// The Chang fragment with indices up to n_max, as a partial subalgebra.
inline PartialAlgebra chang_fragment(std::uint64_t n_max) {
  Chain c = Chain::make("C");
  std::vector<Element> elems;
  for (std::uint64_t i = 0; i <= n_max; ++i) {
    elems.push_back(Element(ChangElem::a(i)));
    elems.push_back(Element(ChangElem::b(i)));
  }
  return partial_subalgebra(c, std::move(elems));
}

/// The geometric embedding of the Chang fragment into the rotation of
/// the standard cancellative hoop: a_n -> pos(ratio^n), b_n ->
/// neg(ratio^n). Any ratio strictly between 0 and 1 works.
inline EmbeddingMap chang_into_rotation(std::uint64_t n_max,
                                        const Rational& ratio) {
  if (!(Rational::zero() < ratio) || !(ratio < Rational::one()))
    throw argument_error("ratio must lie strictly between 0 and 1");
  PartialAlgebra frag = chang_fragment(n_max);
  EmbeddingMap m;
  for (const Element& e : frag.carrier) {
    const ChangElem& ce = std::get<ChangElem>(e);
    Rational v = Rational::one();
    for (std::uint64_t i = 0; i < ce.index; ++i) v = v * ratio;
    m.image.push_back(ce.side == ChangElem::Side::A
                          ? Element(RotElem::pos(v))
                          : Element(RotElem::neg(v)));
  }
  return m;
}

}  // namespace blc

#endif
