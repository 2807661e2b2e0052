#include <catch2/catch_amalgamated.hpp>

#include "terracini/expr.hpp"
#include "terracini/fp.hpp"
#include "terracini/rat.hpp"
#include "terracini/rng.hpp"

using namespace terracini;

namespace {
const std::vector<std::string> U12 = {"u1", "u2"};
}

TEST_CASE("basic expressions parse", "[expr]") {
  RatField f;
  MPoly<Rat> p = parse_poly("u1^2 + 2*u1*u2", U12, f);
  REQUIRE(p.terms().size() == 2);
  REQUIRE(p.terms().at({2, 0}) == Rat(1));
  REQUIRE(p.terms().at({1, 1}) == Rat(2));

  MPoly<Rat> half = parse_poly("3/2", U12, f);
  REQUIRE(half == MPoly<Rat>::constant(U12, Rat(3, 2)));

  // binomial cube, checked against an independent expansion
  MPoly<Rat> cube = parse_poly("(u1+u2)^3", U12, f);
  MPoly<Rat> oracle =
      (MPoly<Rat>::variable(U12, 0, f.one()) +
       MPoly<Rat>::variable(U12, 1, f.one()))
          .pow(3);
  REQUIRE(cube == oracle);
  REQUIRE(cube.terms().at({3, 0}) == Rat(1));
  REQUIRE(cube.terms().at({2, 1}) == Rat(3));
  REQUIRE(cube.terms().at({1, 2}) == Rat(3));
  REQUIRE(cube.terms().at({0, 3}) == Rat(1));

  // whitespace is insignificant
  REQUIRE(parse_poly(" u1 \n + u2 ", U12, f) ==
          parse_poly("u1+u2", U12, f));

  // leading minus as printed for negative heads
  REQUIRE(parse_poly("-u1 + 3", U12, f) ==
          parse_poly("3 - u1", U12, f));
}

TEST_CASE("parse errors carry positions", "[expr]") {
  RatField f;
  try {
    parse_poly("u1 +\n  u3", U12, f);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    REQUIRE(e.line == 2);
    REQUIRE(e.col == 3);
    REQUIRE(std::string(e.what()).find("u3") != std::string::npos);
  }

  // implicit multiplication is rejected
  REQUIRE_THROWS_AS(parse_poly("2u1", U12, f), ParseError);
  REQUIRE_THROWS_AS(parse_poly("u1 u2", U12, f), ParseError);
  REQUIRE_THROWS_AS(parse_poly("(u1", U12, f), ParseError);
  REQUIRE_THROWS_AS(parse_poly("u1 ^ u2", U12, f), ParseError);
  REQUIRE_THROWS_AS(parse_poly("1/0", U12, f), ParseError);
  REQUIRE_THROWS_AS(parse_poly("", U12, f), ParseError);
}

TEST_CASE("printing round-trips through the grammar", "[expr]") {
  RatField rf;
  Rng rng(77);
  for (int round = 0; round < 10; ++round) {
    MPoly<Rat> p(U12, Rat(0));
    for (int terms = 0; terms < 6; ++terms)
      p.add_term({static_cast<unsigned>(rng.below(4)),
                  static_cast<unsigned>(rng.below(4))},
                 Rat(static_cast<long long>(rng.below(19)) - 9,
                     1 + static_cast<long long>(rng.below(4))));
    REQUIRE(parse_poly(p.str(), U12, rf) == p);
  }

  Rng prng(78);
  FpField pf(random_prime62(prng));
  MPoly<Fp> q(U12, pf.zero());
  q.add_term({2, 1}, pf.from_int(-5));
  q.add_term({0, 0}, pf.from_int(17));
  REQUIRE(parse_poly(q.str(), U12, pf) == q);
}

TEST_CASE("large literals reduce exactly", "[expr]") {
  Rng prng(79);
  FpField pf(random_prime62(prng));
  // 10^30 folded digit by digit
  MPoly<Fp> p = parse_poly("1000000000000000000000000000000", {}, pf);
  Fp expect = pf.one();
  Fp ten = pf.from_int(10);
  for (int i = 0; i < 30; ++i)
    expect *= ten;
  REQUIRE(p == MPoly<Fp>::constant({}, expect));

  RatField rf;
  MPoly<Rat> q = parse_poly("123456789012345678901234567890/7", {}, rf);
  REQUIRE(q.eval({}) == Rat(mpq_class("123456789012345678901234567890/7")));
}
