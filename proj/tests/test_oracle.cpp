#include "doctest.h"
#include "fixtures.hpp"
#include "kgr/oracle.hpp"

using namespace kgr;

TEST_CASE("universe construction rejects graphs with sources") {
  auto g4 = fixtures::graph(fixtures::G4);
  CHECK(has_sources(g4));
  CHECK_THROWS_AS((void)build_universe(g4, DegreeVector({1})), Error);
  auto g2 = fixtures::graph(fixtures::G2);
  CHECK(!has_sources(g2));
  CHECK(build_universe(g2, DegreeVector({2, 2})).paths.size() == 1);
  auto g3 = fixtures::graph(fixtures::G3);
  CHECK(build_universe(g3, DegreeVector({2, 2})).paths.size() == 16);
}

TEST_CASE("prefix membership: extension, non-extension, avoided prefix") {
  auto g2 = fixtures::graph(fixtures::G2);
  PathId ef = g2.parse_path("e.f");
  CHECK(oracle_membership(g2, ef, require_basic(g2, g2.parse_path("e"), {})));
  // the square makes ef = fe, so ef extends f as well
  CHECK(oracle_membership(g2, ef, require_basic(g2, g2.parse_path("f"), {})));
  auto g3x = fixtures::graph(fixtures::G3);
  CHECK(!oracle_membership(g3x, g3x.parse_path("a1"),
                           require_basic(g3x, g3x.parse_path("a2"), {})));
  CHECK(!oracle_membership(g2, ef, require_basic(g2, g2.parse_path("v"), {g2.parse_path("e")})));
  CHECK_THROWS_AS(
      (void)oracle_membership(g2, g2.parse_path("e"), require_basic(g2, g2.parse_path("e.f"), {})),
      Error);
}

TEST_CASE("oracle set equality finds witnesses for corrupted avoidance sets") {
  auto g3 = fixtures::graph(fixtures::G3);
  auto a = require_basic(g3, g3.parse_path("v"), {g3.parse_path("a1")});
  auto b = require_basic(g3, g3.parse_path("v"), {g3.parse_path("b1")});
  auto x = intersect_basic(g3, a, b);
  DegreeVector m{{2, 2}};
  CHECK(!oracle_set_equal(g3, x, x, m).has_value());
  REQUIRE(x.parts.size() == 1);
  REQUIRE(x.parts[0].avoid.size() == 2);
  // drop one transported member: the oracle must notice
  CylinderSet corrupted = x;
  corrupted.parts[0].avoid.pop_back();
  auto witness = oracle_set_equal(g3, x, corrupted, m);
  REQUIRE(witness.has_value());
  CHECK(oracle_member_of(g3, *witness, corrupted) != oracle_member_of(g3, *witness, x));
}

TEST_CASE("oracle function equality distinguishes coefficients") {
  auto g3 = fixtures::graph(fixtures::G3);
  auto a = require_basic(g3, g3.parse_path("a1"), {});
  auto b = require_basic(g3, g3.parse_path("a2"), {});
  auto f = cylfun(g3, g3.basis(1), {{a, Rational(1)}, {b, Rational(1)}});
  auto h = cylfun(g3, g3.basis(1), {{a, Rational(1)}, {b, Rational(2)}});
  DegreeVector m{{2, 2}};
  CHECK(!oracle_function_equal(g3, f, f, m).has_value());
  auto w = oracle_function_equal(g3, f, h, m);
  REQUIRE(w.has_value());
  CHECK(oracle_value(g3, *w, h) - oracle_value(g3, *w, f) == Rational(1));
}
