#include <doctest.h>

#include "blc/checker.hpp"
#include "helpers.hpp"

using namespace blc;
using namespace blc::test;

TEST_CASE("term evaluation") {
  Chain canc = Chain::make("Canc");
  Term u = Term::Uplus(Term::Var("x"), Term::Var("y"));
  Valuation v{{"x", rat(1, 3)}, {"y", rat(1, 7)}};
  CHECK(eq(canc, eval_term(u, canc, v), canc.top()));
  CHECK(eq(canc, eval_term(Term::One(), canc, Valuation{}), canc.top()));
  Chain luk = Chain::make("LukStd");
  Term t = Term::Pow(Term::NUplus(2, Term::Var("x")), 2);
  CHECK(eq(luk, eval_term(t, luk, Valuation{{"x", rat(2, 5)}}), rat(3, 5)));
  // bounded-only nodes are rejected on unbounded hoops before evaluation
  CHECK_THROWS_AS(eval_term(Term::Neg(Term::Var("x")), canc, v),
                  unsupported_operation);
  CHECK_THROWS_AS(eval_term(Term::Zero(), canc, Valuation{}),
                  unsupported_operation);
  CHECK(term_needs_bounds(Term::NOplus(2, Term::Var("x"))));
  CHECK_FALSE(term_needs_bounds(u));
}

TEST_CASE("equation text parsing") {
  Equation e = parse_equation("uplus(x,y) = oplus(x,y)");
  CHECK(e.vars == std::vector<std::string>{"x", "y"});
  CHECK(e.lhs == Term::Uplus(Term::Var("x"), Term::Var("y")));
  CHECK(e.rhs == Term::Oplus(Term::Var("x"), Term::Var("y")));
  CHECK_THROWS_AS(parse_equation("x + y"), parse_error);
  CHECK_THROWS_AS(parse_equation("x = y = z"), parse_error);
  CHECK(named_equation("cha").str() ==
        "pow(nuplus(2, x), 2) = nuplus(2, pow(x, 2))");
  CHECK(named_equation("inv").lhs == Term::Neg(Term::Neg(Term::Var("x"))));
  CHECK(named_equation("a7").rhs == Term::One());
}

TEST_CASE("check_equation on the cha identity") {
  Equation cha = named_equation("cha");
  Chain luk = Chain::make("LukStd");

  SUBCASE("fails on the standard MV chain, witness replayable") {
    Verdict v = check_equation(cha, luk, ValuationSource::Grid(10));
    REQUIRE_FALSE(v.holds);
    Element l = eval_term(cha.lhs, luk, v.witness);
    Element r = eval_term(cha.rhs, luk, v.witness);
    CHECK(eq(luk, l, *v.lhs));
    CHECK(eq(luk, r, *v.rhs));
    CHECK_FALSE(eq(luk, l, r));
  }

  SUBCASE("the canonical witness 2/5 gives 3/5 versus 0") {
    Verdict v = check_equation(
        cha, luk,
        ValuationSource::Probes({Valuation{{"x", rat(2, 5)}}}));
    REQUIRE_FALSE(v.holds);
    CHECK(eq(luk, v.witness.at("x"), rat(2, 5)));
    CHECK(eq(luk, *v.lhs, rat(3, 5)));
    CHECK(eq(luk, *v.rhs, rat(0)));
  }

  SUBCASE("holds on Chang up to index 50") {
    Chain chang = Chain::make("C");
    Verdict v = check_equation(cha, chang, ValuationSource::ChangIndices(50));
    CHECK(v.holds);
    CHECK(v.checked == 102);
    CHECK_FALSE(v.decisive);  // bounded exploration, not a decision
  }

  SUBCASE("syntactically equal sides always hold") {
    Equation triv = Equation::make("triv", Term::Var("x"), Term::Var("x"));
    Verdict v = check_equation(triv, luk, ValuationSource::Grid(6));
    CHECK(v.holds);
  }
}

TEST_CASE("cha holds on the rotation, Goedel and product chains") {
  Equation cha = named_equation("cha");
  CHECK(check_equation(cha, Chain::make("V"),
                       ValuationSource::Random(3000, 0xb1c, 32))
            .holds);
  CHECK(check_equation(cha, Chain::make("GodStd"), ValuationSource::Grid(24))
            .holds);
  CHECK(check_equation(cha, Chain::make("ProdStd"), ValuationSource::Grid(12))
            .holds);
  CHECK(check_equation(cha, Chain::make("omega*V"),
                       ValuationSource::Random(3000, 0xb1c, 16))
            .holds);
}

TEST_CASE("p0 separates from cha on Chang plus the standard MV chain") {
  Chain c = Chain::make("C ++ LukStd");
  Equation cha = named_equation("cha");
  Equation p0 = named_equation("p0");
  ValuationSource src = ValuationSource::Mixed(
      {ValuationSource::Grid(8),
       ValuationSource::Random(2000, 0xb1c, 12)});
  CHECK(check_equation(p0, c, src).holds);
  Verdict bad = check_equation(
      cha, c,
      ValuationSource::Probes({Valuation{{"x", at(c, 1, rat(2, 5))}}}));
  REQUIRE_FALSE(bad.holds);
  CHECK(eq(c, *bad.lhs, at(c, 1, rat(3, 5))));
  CHECK(eq(c, *bad.rhs, at(c, 1, rat(0))));  // component-1 bottom
  // the oplus version of the identity nevertheless holds there
  CHECK(check_equation(named_equation("cha-oplus"), c, src).holds);
}

TEST_CASE("cha and its oplus version agree on MV chains") {
  Equation cha = named_equation("cha");
  Equation cha2 = named_equation("cha-oplus");
  for (const char* name : {"MV(4)", "LukStd", "C", "V"}) {
    Chain c = Chain::make(name);
    CAPTURE(name);
    ValuationSource src =
        c.finite() ? ValuationSource::Exhaustive()
        : (!c.is_sum() &&
           c.descriptor_atom().kind == Descriptor::Kind::chang)
            ? ValuationSource::ChangIndices(25)
            : ValuationSource::Grid(16);
    CHECK(check_equation(cha, c, src).holds ==
          check_equation(cha2, c, src).holds);
  }
}

TEST_CASE("find_counterexample") {
  SUBCASE("INV on the three-element Goedel chain") {
    Verdict v = find_counterexample(named_equation("inv"), Chain::make("G(3)"));
    REQUIRE_FALSE(v.holds);
    CHECK(v.decisive);  // finite chain: this is a decision
    Chain g3 = Chain::make("G(3)");
    CHECK(eq(g3, v.witness.at("x"), rat(1, 2)));
    CHECK(eq(g3, *v.lhs, rat(1)));
    CHECK(eq(g3, *v.rhs, rat(1, 2)));
  }

  SUBCASE("x = x holds everywhere") {
    Equation triv = Equation::make("triv", Term::Var("x"), Term::Var("x"));
    CHECK(find_counterexample(triv, Chain::make("LukStd")).holds);
    CHECK(find_counterexample(triv, Chain::make("C")).holds);
  }

  SUBCASE("cha on Chang plus standard MV finds an upper-component witness") {
    Chain c = Chain::make("C ++ LukStd");
    Verdict v = find_counterexample(named_equation("cha"), c, {16, 16});
    REQUIRE_FALSE(v.holds);
    const SumElem& w = std::get<SumElem>(v.witness.at("x"));
    REQUIRE(w.part.has_value());
    CHECK(w.part->component == 1);
  }

  SUBCASE("smallest denominator first on the standard MV chain") {
    Verdict v = find_counterexample(named_equation("cha"), Chain::make("LukStd"));
    REQUIRE_FALSE(v.holds);
    Chain luk = Chain::make("LukStd");
    CHECK(eq(luk, v.witness.at("x"), rat(1, 2)));  // 1/2 falsifies cha too
  }

  SUBCASE("cha survives the deepening budget on Chang") {
    Verdict v = find_counterexample(named_equation("cha"), Chain::make("C"));
    CHECK(v.holds);
    CHECK_FALSE(v.decisive);
  }
}

TEST_CASE("enumerate_finite_sums") {
  auto names = [](const std::vector<Chain>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.name());
    return out;
  };
  CHECK(names(enumerate_finite_sums(2)) == std::vector<std::string>{"MV(2)"});
  CHECK(names(enumerate_finite_sums(3)) ==
        std::vector<std::string>{"MV(2)", "MV(3)", "MV(2) ++ MV(2)"});
  CHECK_THROWS_AS(enumerate_finite_sums(1), argument_error);
  // every enumerated chain passes a BL law sample
  for (const Chain& c : enumerate_finite_sums(5)) {
    CAPTURE(c.name());
    auto carrier = c.carrier();
    for (const Element& x : carrier) {
      for (const Element& y : carrier) {
        CHECK(eq(c, c.meet(x, y), c.mul(x, c.imp(x, y))));
        CHECK(eq(c, c.join(c.imp(x, y), c.imp(y, x)), c.top()));
        for (const Element& z : carrier)
          CHECK(c.leq(c.mul(z, x), y) == c.leq(z, c.imp(x, y)));
      }
    }
  }
}

TEST_CASE("cha on finite sums holds exactly for stacked two-chains") {
  Equation cha = named_equation("cha");
  for (const Chain& c : enumerate_finite_sums(6)) {
    bool all_two = true;
    // MV(2) components contribute size-1 slices; the chain is a stack of
    // two-chains iff its carrier is {0,...,1} with k = number of parts+1,
    // equivalently every component has size 2.
    const Descriptor& d = c.descriptor();
    if (d.kind == Descriptor::Kind::finite_mv) {
      all_two = d.size == 2;
    } else {
      for (const auto& part : d.components)
        if (part.size != 2) all_two = false;
    }
    Verdict v = check_equation(cha, c, ValuationSource::Exhaustive());
    CAPTURE(c.name());
    CHECK(v.holds == all_two);
  }
}

TEST_CASE("sources are deterministic and validated") {
  Chain luk = Chain::make("LukStd");
  ValuationSource r1 = ValuationSource::Random(50, 0xb1c, 64);
  std::vector<Valuation> a, b;
  r1.for_each(luk, {"x", "y"}, [&](const Valuation& v) {
    a.push_back(v);
    return true;
  });
  r1.for_each(luk, {"x", "y"}, [&](const Valuation& v) {
    b.push_back(v);
    return true;
  });
  CHECK(a == b);
  CHECK(a.size() == 50);

  std::vector<Element> pool = grid_pool(luk, 3);
  REQUIRE(pool.size() == 5);
  CHECK(eq(luk, pool[0], rat(0)));
  CHECK(eq(luk, pool[1], rat(1)));
  CHECK(eq(luk, pool[2], rat(1, 2)));
  CHECK(eq(luk, pool[3], rat(1, 3)));
  CHECK(eq(luk, pool[4], rat(2, 3)));

  CHECK_THROWS_AS(ValuationSource::Exhaustive().for_each(
                      luk, {"x"}, [](const Valuation&) { return true; }),
                  strategy_error);
  CHECK_THROWS_AS(ValuationSource::ChangIndices(5).for_each(
                      luk, {"x"}, [](const Valuation&) { return true; }),
                  strategy_error);
  CHECK_THROWS_AS(
      ValuationSource::Probes({Valuation{}})
          .for_each(luk, {"x"}, [](const Valuation&) { return true; }),
      strategy_error);

  // mixed sources visit probes before anything else
  ValuationSource mixed = ValuationSource::Mixed(
      {ValuationSource::Probes({Valuation{{"x", rat(2, 5)}}}),
       ValuationSource::Grid(4)});
  std::vector<Valuation> seen;
  mixed.for_each(luk, {"x"}, [&](const Valuation& v) {
    seen.push_back(v);
    return true;
  });
  REQUIRE_FALSE(seen.empty());
  CHECK(eq(luk, seen[0].at("x"), rat(2, 5)));
}

TEST_CASE("omega sum sampling stays within the window") {
  Chain w = Chain::make("omega*V");
  SplitMix64 rng(0x5);
  for (int i = 0; i < 500; ++i) {
    Element e = random_element(w, rng, 8);
    const SumElem& s = std::get<SumElem>(e);
    if (!s.is_top()) CHECK(s.part->component < 5);
  }
}
