#include <doctest.h>

#include "alexpoly/module.hpp"
#include "test_util.hpp"

using namespace alexpoly;
using testutil::L;
using testutil::P;

namespace {

GammaMatrix diag(const std::vector<LaurentPoly>& d) {
  GammaMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) {
    m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  }
  return m;
}

}  // namespace

TEST_CASE("module_from_presentation") {
  TorsionModule triv = module_from_presentation(GammaMatrix::identity(2));
  CHECK(triv.is_trivial());

  GammaMatrix c(1, 1);
  c.at(0, 0) = L({1, -3, 1});
  TorsionModule cyc = module_from_presentation(c);
  CHECK(cyc.free_rank == 0);
  REQUIRE(cyc.invariants.size() == 1);
  CHECK(cyc.invariants[0] == P({1, -3, 1}));

  TorsionModule chained =
      module_from_presentation(diag({L({-2, 1}), L({4, -4, 1})}));
  REQUIRE(chained.invariants.size() == 2);
  CHECK(chained.invariants[0] == P({-2, 1}));
  CHECK(chained.invariants[1] == P({4, -4, 1}));
}

TEST_CASE("associated_polynomial") {
  CHECK(associated_polynomial(TorsionModule::trivial()).is_one());
  TorsionModule m = TorsionModule::from_invariants({P({-2, 1}), P({-3, 1})});
  CHECK(associated_polynomial(m) == P({6, -5, 1}));
  TorsionModule sq = TorsionModule::from_invariants({P({-1, 1}), P({-1, 1})});
  CHECK(associated_polynomial(sq) == P({1, -2, 1}));
  CHECK_THROWS_AS(associated_polynomial(TorsionModule::free_module(1)), Error);
}

TEST_CASE("primary_decomposition") {
  TorsionModule m =
      TorsionModule::cyclic(primitive_part(L({-1, 1}) * L({-2, 1})));
  auto dec = primary_decomposition(m);
  REQUIRE(dec.size() == 2);
  CHECK(dec.at(P({-1, 1})).invariants ==
        std::vector<PrimitivePoly>{P({-1, 1})});
  CHECK(dec.at(P({-2, 1})).invariants ==
        std::vector<PrimitivePoly>{P({-2, 1})});

  TorsionModule p2 = TorsionModule::cyclic(P({1, -2, 1}));  // (t-1)^2
  auto dec2 = primary_decomposition(p2);
  REQUIRE(dec2.size() == 1);
  CHECK(dec2.at(P({-1, 1})).invariants ==
        std::vector<PrimitivePoly>{P({1, -2, 1})});

  CHECK(primary_decomposition(TorsionModule::trivial()).empty());
}

TEST_CASE("tensor and torsion products") {
  TorsionModule a = TorsionModule::cyclic(P({-2, 1}));
  TorsionModule b = TorsionModule::cyclic(P({-3, 1}));
  CHECK(tensor_product(a, b).is_trivial());

  TorsionModule asq = TorsionModule::cyclic(P({4, -4, 1}));
  TorsionModule ten = tensor_product(asq, a);
  CHECK(ten.free_rank == 0);
  CHECK(ten.invariants == std::vector<PrimitivePoly>{P({-2, 1})});

  TorsionModule g1 = TorsionModule::free_module(1);
  TorsionModule fp = tensor_product(g1, a);
  CHECK(fp.free_rank == 1);
  CHECK(fp.invariants == std::vector<PrimitivePoly>{P({-2, 1})});
  bool flagged = false;
  tensor_product(g1, g1, &flagged);
  CHECK(flagged);

  CHECK(torsion_product(a, a).invariants ==
        std::vector<PrimitivePoly>{P({-2, 1})});
  CHECK(torsion_product(g1, a).is_trivial());
  CHECK(torsion_product(a, b).is_trivial());
}

TEST_CASE("direct_sum and rechain") {
  TorsionModule a = TorsionModule::cyclic(P({-2, 1}));
  CHECK(direct_sum(a, TorsionModule::trivial()) == a);
  TorsionModule two = direct_sum(a, a);
  CHECK(two.invariants ==
        std::vector<PrimitivePoly>{P({-2, 1}), P({-2, 1})});
  TorsionModule mixed = direct_sum(a, TorsionModule::cyclic(P({-3, 1})));
  CHECK(mixed.invariants == std::vector<PrimitivePoly>{P({6, -5, 1})});
}

TEST_CASE("q_dimension") {
  CHECK(q_dimension(TorsionModule::trivial()) == 0);
  CHECK(q_dimension(TorsionModule::cyclic(P({1, -3, 1}))) == 2);
  TorsionModule m =
      TorsionModule::from_invariants({P({1, -2, 1}), P({-1, 1})});
  CHECK(q_dimension(m) == 3);
  CHECK_THROWS_AS(q_dimension(TorsionModule::free_module(2)), Error);
}

TEST_CASE("q_dimension additive over direct sum and primary parts") {
  testutil::Rng rng(53);
  for (int i = 0; i < 10; ++i) {
    TorsionModule a = TorsionModule::from_invariants(
        {rng.unimodular_at_one(2), rng.unimodular_at_one(2)});
    TorsionModule b = TorsionModule::from_invariants({rng.unimodular_at_one(3)});
    CHECK(q_dimension(direct_sum(a, b)) == q_dimension(a) + q_dimension(b));
    long total = 0;
    for (const auto& [p, part] : primary_decomposition(a)) {
      total += q_dimension(part);
    }
    CHECK(total == q_dimension(a));
    CHECK(similar(associated_polynomial(direct_sum(a, b)),
                  mul_class(associated_polynomial(a), associated_polynomial(b)),
                  Ring::Lambda));
  }
}

TEST_CASE("is_type_K") {
  CHECK(is_type_K(TorsionModule::cyclic(P({1, -3, 1}))));
  CHECK_FALSE(is_type_K(TorsionModule::cyclic(P({-1, 1}))));
  CHECK_FALSE(
      is_type_K(TorsionModule::cyclic(P({-1, 0, 0, 0, 0, 0, 1}))));
  CHECK_FALSE(is_type_K(TorsionModule::free_module(1)));
  CHECK(is_type_K(TorsionModule::trivial()));
}

TEST_CASE("tensor and torsion products commute") {
  testutil::Rng rng(59);
  for (int i = 0; i < 10; ++i) {
    TorsionModule a = TorsionModule::from_invariants(
        {rng.unimodular_at_one(2), rng.unimodular_at_one(1)});
    TorsionModule b = TorsionModule::from_invariants({rng.unimodular_at_one(2)});
    CHECK(tensor_product(a, b) == tensor_product(b, a));
    CHECK(torsion_product(a, b) == torsion_product(b, a));
  }
}
