#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexpoly/io.hpp"
#include "datum_gen.hpp"

using namespace alexpoly;
using testutil::L;
using testutil::P;

namespace {

const char* kSeed =
    "n: 4\n"
    "kind: locally_flat_disk\n"
    "sigma_reduced_betti: []\n"
    "nu: [[0; 2, -5, 2]]\n"
    "lambda: [[0; -2, 1], [0; 1]]\n"
    "mu: [[0; 1], [0; -1, 2]]\n";

}  // namespace

TEST_CASE("parse and serialize round trip is byte stable") {
  KnotDatum d = parse_datum(kSeed);
  CHECK(d.n == 4);
  CHECK(d.kind == KnotKind::LocallyFlatDisk);
  CHECK(d.lambda_at(1) == P({-2, 1}));
  std::string text = serialize_datum(d);
  CHECK(text == kSeed);
  CHECK(serialize_datum(parse_datum(text)) == text);
}

TEST_CASE("trivial datum round trip") {
  KnotDatum t = KnotDatum::trivial(5);
  KnotDatum back = parse_datum(serialize_datum(t));
  CHECK(back.n == 5);
  for (const auto& p : back.lambda) CHECK(p.is_one());
}

TEST_CASE("non-canonical polynomials normalize with a warning") {
  std::string text =
      "n: 4\n"
      "kind: locally_flat_disk\n"
      "sigma_reduced_betti: []\n"
      "nu: [[0; 1]]\n"
      "lambda: [[1; 3/2, -3/2], [0; 1]]\n"
      "mu: [[0; 1], [0; 1]]\n";
  std::vector<std::string> warnings;
  KnotDatum d = parse_datum(text, &warnings);
  CHECK(d.lambda_at(1) == P({1, -1}));
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("lambda") != std::string::npos);
}

TEST_CASE("parse errors carry a location") {
  try {
    parse_datum("n: 4\nkind: locally_flat_disk\nnu: [[0; 1]\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line >= 3);
  }
  CHECK_THROWS_AS(parse_datum("n: 4\n"), ParseError);
  CHECK_THROWS_AS(parse_datum("nonsense"), ParseError);
}

TEST_CASE("partial datum with placeholders") {
  std::string text =
      "n: 4\n"
      "kind: locally_flat_disk\n"
      "sigma_reduced_betti: []\n"
      "nu: [[0; 2, -5, 2]]\n"
      "lambda: [[0; -2, 1], [0; -1, 2]]\n"
      "mu: [_, _]\n";
  PartialKnotDatum partial = parse_partial_datum(text);
  CHECK_FALSE(partial.mu[0].has_value());
  KnotDatum d = complete_by_duality(partial);
  CHECK(d.mu_at(1) == P({-2, 1}));
  // The full parser rejects placeholders.
  CHECK_THROWS_AS(parse_datum(text), Error);
}

TEST_CASE("invariant attachments round trip") {
  KnotDatum d = KnotDatum::trivial(4);
  d.lambda[0] = P({1, -1, 1});
  d.lambda_inv =
      std::vector<std::vector<PrimitivePoly>>{{P({1, -1, 1})}, {}};
  std::string text = serialize_datum(d);
  KnotDatum back = parse_datum(text);
  REQUIRE(back.lambda_inv);
  CHECK((*back.lambda_inv)[0][0] == P({1, -1, 1}));
  CHECK(serialize_datum(back) == text);
}

TEST_CASE("construction outputs round trip byte-identically") {
  testutil::Rng rng(131);
  for (int it = 0; it < 5; ++it) {
    KnotDatum d = testutil::random_valid_disk_datum(
        rng, static_cast<int>(rng.pick(4, 6)));
    KnotDatum spun = frame_spin(derive_subpolynomials(d),
                                BettiProfile{{1, 1}});
    std::string text = serialize_datum(spun);
    KnotDatum back = parse_datum(text);
    CHECK(serialize_datum(back) == text);
    CHECK(back.n == spun.n);
    CHECK(back.lambda == spun.lambda);
    CHECK(back.sub_a == spun.sub_a);
  }
}

TEST_CASE("sphere polys file") {
  SphereKnotPolys s = parse_sphere_polys(
      "n: 4\np: [[0; -2, 1], [0; -1, 2]]\n");
  CHECK(s.n == 4);
  CHECK(s.p[0] == P({-2, 1}));
  CHECK_THROWS_AS(parse_sphere_polys("n: 4\n"), ParseError);
}

TEST_CASE("poly literal parsing") {
  CHECK(parse_poly_literal("[-1; -2, 5, -2]") == P({2, -5, 2}));
  CHECK(parse_laurent_literal("[-1; -2, 5, -2]") == L({-2, 5, -2}, -1));
  CHECK(parse_laurent_literal("[0; 1/2, 1]") ==
        LaurentPoly::from_coeffs(0, {Rat(1, 2), Rat(1)}));
  CHECK_THROWS_AS(parse_poly_literal("[0; 1] junk"), ParseError);
  CHECK_THROWS_AS(parse_poly_literal("[0; 1/0]"), ParseError);
}

TEST_CASE("matrix literals") {
  IntMatrix m = parse_int_matrix("1,0;1,1");
  CHECK(m.size() == 2);
  CHECK(m.at(1, 0) == 1);
  CHECK(parse_int_matrix("").size() == 0);
  CHECK_THROWS_AS(parse_int_matrix("1,0;1"), Error);

  GammaMatrix g = parse_gamma_matrix("[0; -1, 1],2;0,[0; 1, 1]");
  CHECK(g.rows() == 2);
  CHECK(g.at(0, 0) == L({-1, 1}));
  CHECK(g.at(0, 1) == L({2}));
  CHECK(g.at(1, 1) == L({1, 1}));
}
