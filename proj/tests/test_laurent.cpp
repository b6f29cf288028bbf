#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexpoly/laurent.hpp"
#include "alexpoly/rational_function.hpp"
#include "test_util.hpp"

using namespace alexpoly;
using testutil::L;
using testutil::P;

TEST_CASE("multiplication") {
  CHECK(L({-1, 1}) * L({1, 1}) == L({-1, 0, 1}));
  LaurentPoly p = L({3, 0, -2}, -1);
  CHECK(LaurentPoly::one() * p == p);
  // (1/t - 2)(t - 2) = -2t + 5 - 2/t
  CHECK(L({1, -2}, -1) * L({-2, 1}) == L({-2, 5, -2}, -1));
}

TEST_CASE("ring laws on random inputs") {
  testutil::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = rng.poly(), b = rng.poly(), c = rng.poly();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("normalize_primitive") {
  // (3/2)t^3 - (3/2)t^2
  LaurentPoly p = LaurentPoly::from_coeffs(2, {Rat(-3, 2), Rat(3, 2)});
  auto [prim, unit] = normalize_primitive(p);
  CHECK(prim == P({-1, 1}));
  CHECK(unit.scale == Rat(3, 2));
  CHECK(unit.shift == 2);

  auto [one, u1] = normalize_primitive(LaurentPoly::one());
  CHECK(one.is_one());
  CHECK(u1.scale == 1);
  CHECK(u1.shift == 0);

  auto [q, uq] = normalize_primitive(L({-2, 5, -2}, -1));
  CHECK(q == P({2, -5, 2}));
  CHECK(uq.scale == -1);
  CHECK(uq.shift == -1);

  CHECK_THROWS_AS(normalize_primitive(LaurentPoly::zero()), Error);
  // Idempotent on already-primitive input.
  auto [r, ur] = normalize_primitive(q.to_laurent());
  CHECK(r == q);
  CHECK(ur.scale == 1);
  CHECK(ur.shift == 0);
}

TEST_CASE("primitive product of primitives (Gauss)") {
  testutil::Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    LaurentPoly a = rng.poly(), b = rng.poly();
    PrimitivePoly lhs = primitive_part(a * b);
    PrimitivePoly rhs =
        mul_class(primitive_part(a), primitive_part(b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("reciprocal") {
  LaurentPoly p = L({1, -3, 1});
  CHECK(p.reciprocal() == L({1, -3, 1}, -2));
  LaurentPoly sym = L({-1, 3, -1}, -1);
  CHECK(sym.reciprocal() == sym);
  testutil::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly q = rng.poly();
    CHECK(q.reciprocal().reciprocal() == q);
  }
}

TEST_CASE("similar") {
  CHECK(similar(L({-1, 1}), L({0, 0, -5, 5}), Ring::Gamma));
  CHECK_FALSE(similar(L({-1, 1}), L({0, 0, -5, 5}), Ring::Lambda));
  CHECK(similar(L({1, -3, 1}), L({1, -3, 1}, -2), Ring::Lambda));
  CHECK(similar(L({1, -3, 1}), L({-1, 3, -1}, 4), Ring::Lambda));
  CHECK_FALSE(similar(L({1, -3, 1}), LaurentPoly::zero(), Ring::Gamma));
}

TEST_CASE("similarity is an equivalence relation in Lambda mode") {
  testutil::Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly p = rng.poly();
    long k1 = rng.pick(-3, 3), k2 = rng.pick(-3, 3);
    long s1 = rng.pick(0, 1) ? 1 : -1, s2 = rng.pick(0, 1) ? 1 : -1;
    LaurentPoly a = p.scaled(Rat(s1)).shifted(k1);
    LaurentPoly b = p.scaled(Rat(s2)).shifted(k2);
    CHECK(similar(p, p, Ring::Lambda));
    CHECK(similar(a, b, Ring::Lambda));
    CHECK(similar(b, a, Ring::Lambda));
    CHECK((similar(a, p, Ring::Lambda) && similar(p, b, Ring::Lambda)
               ? similar(a, b, Ring::Lambda)
               : true));
  }
}

TEST_CASE("gcd") {
  // t^6 - 1 and t^2 - t + 1
  LaurentPoly t6m1 = L({-1, 0, 0, 0, 0, 0, 1});
  CHECK(poly_gcd(t6m1, L({1, -1, 1})) == P({1, -1, 1}));
  CHECK(poly_gcd(L({2, 3, -1}), LaurentPoly::one()).is_one());
  CHECK(poly_gcd(L({-1, 1}), L({1, -1, 1})).is_one());
  CHECK_THROWS_AS(poly_gcd(LaurentPoly::zero(), LaurentPoly::zero()), Error);
}

TEST_CASE("gcd properties") {
  testutil::Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    LaurentPoly a = rng.poly(), b = rng.poly(), c = rng.poly();
    PrimitivePoly g = poly_gcd(a, b);
    CHECK(try_divide(a, g.to_laurent()).has_value());
    CHECK(try_divide(b, g.to_laurent()).has_value());
    PrimitivePoly g2 = poly_gcd(a * c, b * c);
    CHECK(similar(g2.to_laurent(), g.to_laurent() * c, Ring::Gamma));
  }
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(L({-1, 0, 1}), L({-1, 1})) == L({1, 1}));
  LaurentPoly p = L({4, 0, -3}, -2);
  CHECK(divide_exact(p, p) == LaurentPoly::one());
  CHECK_THROWS_AS(divide_exact(L({1, -1, 1}), L({-1, 1})), Error);
}

TEST_CASE("evaluate") {
  LaurentPoly p = L({1, -3, 1});
  CHECK(p.evaluate(1) == -1);
  CHECK(p.evaluate(-1) == 5);
  CHECK(LaurentPoly::one().evaluate(Rat(7, 3)) == 1);
  CHECK_THROWS_AS(p.evaluate(0), Error);
}

TEST_CASE("width") {
  CHECK(L({1, -3, 1}).width() == 2);
  CHECK(LaurentPoly::term(7, 5).width() == 0);
  CHECK((L({-1, 1}) * L({1, -1}, -1)).width() == 2);
  CHECK_THROWS_AS(LaurentPoly::zero().width(), Error);
  testutil::Rng rng(13);
  for (int i = 0; i < 25; ++i) {
    LaurentPoly a = rng.poly(), b = rng.poly();
    CHECK((a * b).width() == a.width() + b.width());
    // Width 0 is exactly the unit property: such elements divide 1.
    if (a.width() == 0) {
      CHECK(try_divide(LaurentPoly::one(), a).has_value());
    } else {
      CHECK_FALSE(try_divide(LaurentPoly::one(), a).has_value());
    }
  }
}

TEST_CASE("normalize_symmetric") {
  PrimitivePoly c = P({1, -3, 1});
  PrimitivePoly n = normalize_symmetric(c);
  CHECK(n.to_laurent() == L({-1, 3, -1}, -1));
  CHECK(n.to_laurent().evaluate(1) == 1);
  CHECK(n.to_laurent().reciprocal() == n.to_laurent());
  CHECK(normalize_symmetric(PrimitivePoly::one()).is_one());
  // t - 1 is self-reciprocal up to unit but evaluates to 0 at 1.
  CHECK_THROWS_AS(normalize_symmetric(P({-1, 1})), Error);
  // t - 2 is not self-reciprocal at all.
  CHECK_THROWS_AS(normalize_symmetric(P({-2, 1})), Error);
}

TEST_CASE("strip_t_minus_one") {
  PrimitivePoly p = primitive_part(L({-1, 1}) * L({-1, 1}) * L({-2, 1}));
  auto [k, rest] = strip_t_minus_one(p);
  CHECK(k == 2);
  CHECK(rest == P({-2, 1}));
  auto [k0, r0] = strip_t_minus_one(P({1, -3, 1}));
  CHECK(k0 == 0);
}

TEST_CASE("rational functions") {
  RationalFunction f(L({-1, 1}), L({1, 1}));  // (t-1)/(t+1)
  RationalFunction g(L({-1, 0, 1}), L({1, 2, 1}));  // (t^2-1)/(t+1)^2
  CHECK(f == g);
  CHECK(f * f == g * g);
  CHECK((f - f).is_zero());
  RationalFunction rec = f.reciprocal_t();  // (1/t-1)/(1/t+1) = (1-t)/(1+t)
  CHECK(rec == -f);
  CHECK(f / f == RationalFunction::one());
  CHECK_THROWS_AS(RationalFunction(L({1}), LaurentPoly::zero()), Error);
}

TEST_CASE("polynomial literals render canonically") {
  CHECK(L({-2, 5, -2}, -1).to_literal() == "[-1; -2, 5, -2]");
  CHECK(LaurentPoly::from_coeffs(0, {Rat(3, 2), Rat(1)}).to_literal() ==
        "[0; 3/2, 1]");
  CHECK(LaurentPoly::zero().to_literal() == "[0; 0]");
}
