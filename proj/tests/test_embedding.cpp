#include <doctest.h>

#include "blc/embedding.hpp"
#include "helpers.hpp"

using namespace blc;
using namespace blc::test;

TEST_CASE("partial subalgebra definedness convention") {
  Chain c = Chain::make("C");
  PartialAlgebra p =
      partial_subalgebra(c, {ca(0), ca(1), cb(0), cb(1)});
  REQUIRE(p.size() == 4);
  // carrier ascending: b0 < b1 < a1 < a0
  CHECK(eq(c, p.carrier[0], cb(0)));
  CHECK(eq(c, p.carrier[3], ca(0)));
  auto idx = [&](const Element& e) { return *p.index_of(e); };
  // a1 * a1 = a2 is outside, so undefined
  CHECK_FALSE(p.mul_table[idx(ca(1))][idx(ca(1))].has_value());
  // b1 * b1 = b0 stays inside, so defined
  REQUIRE(p.mul_table[idx(cb(1))][idx(cb(1))].has_value());
  CHECK(*p.mul_table[idx(cb(1))][idx(cb(1))] == idx(cb(0)));
  CHECK(p.bottom_index == idx(cb(0)));
  CHECK(p.top_index == idx(ca(0)));
  CHECK_THROWS_AS(partial_subalgebra(c, {ca(1), ca(1)}), argument_error);
}

TEST_CASE("a singleton or closed carrier is fully defined") {
  Chain any = Chain::make("LukStd");
  PartialAlgebra single = partial_subalgebra(any, {rat(1)});
  CHECK(single.mul_table[0][0].has_value());
  CHECK(single.imp_table[0][0].has_value());
  // {0, 1/2, 1} is closed under both operations: it is the 3-chain
  PartialAlgebra closed =
      partial_subalgebra(any, {rat(0), rat(1, 2), rat(1)});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(closed.mul_table[i][j].has_value());
      CHECK(closed.imp_table[i][j].has_value());
    }
  }
}

TEST_CASE("check_embedding validates order, bounds and operations") {
  Chain luk = Chain::make("LukStd");
  Chain mv3 = Chain::make("MV(3)");
  PartialAlgebra p = partial_subalgebra(mv3, mv3.carrier());

  SUBCASE("inclusion works") {
    EmbeddingMap inc{{rat(0), rat(1, 2), rat(1)}};
    CHECK(check_embedding(inc, p, luk).ok);
  }
  SUBCASE("swapping two points breaks the order") {
    EmbeddingMap bad{{rat(1, 2), rat(0), rat(1)}};
    EmbeddingCheck chk = check_embedding(bad, p, luk);
    CHECK_FALSE(chk.ok);
    CHECK(chk.violation.find("order") != std::string::npos);
  }
  SUBCASE("moving an interior point breaks an operation") {
    EmbeddingMap bad{{rat(0), rat(1, 3), rat(1)}};
    EmbeddingCheck chk = check_embedding(bad, p, luk);
    CHECK_FALSE(chk.ok);  // 1/3 * 1/3 = 0 but => table disagrees
  }
  SUBCASE("bounds must be preserved") {
    PartialAlgebra ends = partial_subalgebra(mv3, {rat(0), rat(1)});
    EmbeddingMap bad{{rat(1, 4), rat(1)}};
    CHECK_FALSE(check_embedding(bad, ends, luk).ok);
    EmbeddingMap good{{rat(0), rat(1)}};
    CHECK(check_embedding(good, ends, luk).ok);
  }
  SUBCASE("a partial map is rejected") {
    EmbeddingMap incomplete{{rat(0), rat(1)}};
    CHECK_FALSE(check_embedding(incomplete, p, luk).ok);
  }
}

TEST_CASE("the Chang fragment embeds geometrically into the rotation") {
  Chain v = Chain::make("V");
  PartialAlgebra frag = chang_fragment(5);
  REQUIRE(frag.size() == 12);

  SUBCASE("ratio 1/2") {
    EmbeddingMap m = chang_into_rotation(5, Rational(1, 2));
    CHECK(check_embedding(m, frag, v).ok);
    // spot: a_3 -> pos(1/8), b_3 -> neg(1/8)
    CHECK(eq(v, m.image[*frag.index_of(ca(3))], rpos(1, 8)));
    CHECK(eq(v, m.image[*frag.index_of(cb(3))], rneg(1, 8)));
  }
  SUBCASE("the ratio does not matter") {
    EmbeddingMap m = chang_into_rotation(5, Rational(2, 3));
    CHECK(check_embedding(m, frag, v).ok);
  }
  SUBCASE("degenerate fragment is the endpoint map") {
    EmbeddingMap m = chang_into_rotation(0, Rational(1, 2));
    PartialAlgebra tiny = chang_fragment(0);
    REQUIRE(m.image.size() == 2);
    CHECK(eq(v, m.image[0], v.bottom()));
    CHECK(eq(v, m.image[1], v.top()));
    CHECK(check_embedding(m, tiny, v).ok);
  }
  SUBCASE("ratio range is validated") {
    CHECK_THROWS_AS(chang_into_rotation(3, Rational(1)), argument_error);
    CHECK_THROWS_AS(chang_into_rotation(3, Rational(0)), argument_error);
    CHECK_THROWS_AS(chang_into_rotation(3, Rational(3, 2)), argument_error);
  }
}

TEST_CASE("find_embedding recovers Chang fragments inside the rotation") {
  Chain v = Chain::make("V");

  SUBCASE("six-element fragment, small grid") {
    PartialAlgebra p = chang_fragment(2);
    auto m = find_embedding(p, v, {16, 16});
    REQUIRE(m.has_value());
    CHECK(check_embedding(*m, p, v).ok);
  }
  SUBCASE("twelve-element fragment within denominator bound 16") {
    PartialAlgebra p = chang_fragment(5);
    auto m = find_embedding(p, v, {16, 16});
    REQUIRE(m.has_value());
    CHECK(check_embedding(*m, p, v).ok);
  }
}

TEST_CASE("trivial and endpoint embeddings") {
  Chain g2 = Chain::make("G(2)");
  PartialAlgebra p = partial_subalgebra(g2, g2.carrier());
  for (const auto& name : all_descriptors()) {
    Chain target = Chain::make(name);
    if (!target.bounded()) continue;
    CAPTURE(name);
    auto m = find_embedding(p, target, {4, 4});
    REQUIRE(m.has_value());
    CHECK(eq(target, m->image[0], target.bottom()));
    CHECK(eq(target, m->image[1], target.top()));
  }
}

TEST_CASE("fragments witnessing the cha failure do not embed into V") {
  // {0, 2/5, 3/5, 4/5, 1} carries the whole cha computation at 2/5
  // inside its tables; V satisfies cha, so no embedding can exist at any
  // budget. The search exhausts its grid and reports not-found.
  Chain luk = Chain::make("LukStd");
  Chain v = Chain::make("V");
  PartialAlgebra p = partial_subalgebra(
      luk, {rat(0), rat(2, 5), rat(3, 5), rat(4, 5), rat(1)});
  CHECK_FALSE(find_embedding(p, v, {8, 8}).has_value());
  CHECK_FALSE(find_embedding(p, v, {12, 12}).has_value());
}

TEST_CASE("the four-point negation fragment does embed into V") {
  // With only * and => tables matched, {0, 2/5, 3/5, 1} is consistent
  // with a rotation image (0 -> neg 1, 2/5 -> neg q, 3/5 -> pos q,
  // 1 -> pos 1); the non-embeddable fragment needs the oplus consequence
  // 4/5 in the carrier.
  Chain luk = Chain::make("LukStd");
  Chain v = Chain::make("V");
  PartialAlgebra p =
      partial_subalgebra(luk, {rat(0), rat(2, 5), rat(3, 5), rat(1)});
  auto m = find_embedding(p, v, {8, 8});
  REQUIRE(m.has_value());
  CHECK(check_embedding(*m, p, v).ok);
  const RotElem& two_fifths = std::get<RotElem>(m->image[1]);
  const RotElem& three_fifths = std::get<RotElem>(m->image[2]);
  CHECK_FALSE(two_fifths.positive);
  CHECK(three_fifths.positive);
  CHECK(two_fifths.value == three_fifths.value);
}

TEST_CASE("completeness on finite targets") {
  // MV(3) cannot sit inside G(3): the only order-preserving bijection
  // fails divisibility of the middle point. The grid is the whole
  // carrier, so not-found is a decision.
  Chain mv3 = Chain::make("MV(3)");
  Chain g3 = Chain::make("G(3)");
  PartialAlgebra p = partial_subalgebra(mv3, mv3.carrier());
  CHECK_FALSE(find_embedding(p, g3, {64, 64}).has_value());
  // and the other way around likewise (negation differs)
  PartialAlgebra q = partial_subalgebra(g3, g3.carrier());
  CHECK_FALSE(find_embedding(q, mv3, {64, 64}).has_value());
}

TEST_CASE("cancellative fragments embed by inclusion") {
  Chain h = Chain::make("Canc");
  PartialAlgebra p = partial_subalgebra(
      h, {rat(1, 8), rat(1, 4), rat(1, 2), rat(3, 4), rat(1)});
  EmbeddingMap identity{p.carrier};
  CHECK(check_embedding(identity, p, h).ok);
  auto found = find_embedding(p, h, {8, 8});
  REQUIRE(found.has_value());
  CHECK(check_embedding(*found, p, h).ok);
}

TEST_CASE("monotone definedness under carrier growth") {
  Chain luk = Chain::make("LukStd");
  SplitMix64 rng(0xe1);
  for (int round = 0; round < 30; ++round) {
    std::vector<Element> small_set, big;
    for (int i = 0; i < 4; ++i) {
      Element e = random_element(luk, rng, 8);
      bool dup = false;
      for (auto& x : small_set) dup = dup || eq(luk, x, e);
      if (!dup) small_set.push_back(e);
    }
    big = small_set;
    for (int i = 0; i < 3; ++i) {
      Element e = random_element(luk, rng, 8);
      bool dup = false;
      for (auto& x : big) dup = dup || eq(luk, x, e);
      if (!dup) big.push_back(e);
    }
    PartialAlgebra ps = partial_subalgebra(luk, small_set);
    PartialAlgebra pb = partial_subalgebra(luk, big);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (!ps.mul_table[i][j]) continue;
        std::size_t bi = *pb.index_of(ps.carrier[i]);
        std::size_t bj = *pb.index_of(ps.carrier[j]);
        REQUIRE(pb.mul_table[bi][bj].has_value());
        CHECK(eq(luk, pb.carrier[*pb.mul_table[bi][bj]],
                 ps.carrier[*ps.mul_table[i][j]]));
      }
    }
  }
}

TEST_CASE("find_embedding is deterministic") {
  Chain v = Chain::make("V");
  PartialAlgebra p = chang_fragment(3);
  auto a = find_embedding(p, v, {16, 16});
  auto b = find_embedding(p, v, {16, 16});
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  for (std::size_t i = 0; i < p.size(); ++i)
    CHECK(eq(v, a->image[i], b->image[i]));
}

TEST_CASE("embedding map serialization") {
  PartialAlgebra frag = chang_fragment(1);
  EmbeddingMap m = chang_into_rotation(1, Rational(1, 2));
  CHECK(m.str(frag) ==
        "b0 -> neg 1; b1 -> neg 1/2; a1 -> pos 1/2; a0 -> pos 1");
}
