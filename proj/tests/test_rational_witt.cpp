#include <doctest.h>

#include "oracles.hpp"
#include "wittkit/parse.hpp"
#include "wittkit/random.hpp"
#include "wittkit/rational_witt.hpp"

using namespace wittkit;

namespace {

const RingSpec Z = RingSpec::integers();

RationalWitt R(const char* text, const RingSpec& ring = Z) { return parse_rational_witt(text, ring); }
UnitPolynomial P(const char* text, const RingSpec& ring = Z) { return parse_polynomial(text, ring); }

}  // namespace

TEST_CASE("group operations") {
  const auto x = R("(1 - t)");
  CHECK(rw_eq(x + R("(1)/(1 - t)"), RationalWitt::zero(Z)));
  CHECK((-R("(1 - 3*t)")).same_representation(RationalWitt(P("1"), P("1 - 3*t"))));
  CHECK(int_scalar(2, x).same_representation(R("1 - 2*t + t^2")));
  CHECK(rw_eq(int_scalar(-1, x), -x));
  CHECK(rw_eq(int_scalar(0, x), RationalWitt::zero(Z)));
  CHECK(rw_eq(x - x, RationalWitt::zero(Z)));
  CHECK(RationalWitt::one(Z).same_representation(R("1 - t")));
}

TEST_CASE("equality is cross-multiplication") {
  CHECK(rw_eq(R("(1 - t^2)/(1 - t)"), R("1 + t")));
  CHECK_FALSE(rw_eq(R("(1 - t^2)/(1 - t)"), R("1 - t")));
  const auto z6 = RingSpec::integers_mod(6);
  const auto a = P("1 - 2*t", z6), b = P("1 + 3*t + t^2", z6);
  CHECK(rw_eq(RationalWitt(a * b, b), RationalWitt(a)));
  CHECK_FALSE(rw_eq(RationalWitt(a, b), RationalWitt(a)));
}

TEST_CASE("companion matrices realize their polynomial") {
  CHECK(companion_of_polynomial(P("1 - 7*t")) == MatrixEndo::from_rows(Z, {{7}}));
  CHECK(companion_of_polynomial(P("1")).size() == 0);
  CHECK(char_series(companion_of_polynomial(P("1"))).is_one());
  CHECK(char_series(companion_of_polynomial(P("1 - 3*t + 2*t^2"))) == P("1 - 3*t + 2*t^2"));

  for (const RingSpec& ring : {Z, RingSpec::integers_mod(6)}) {
    Generator g(3, 3, ring.modulus());
    for (int trial = 0; trial < 100; ++trial) {
      const auto p = g.polynomial(ring, 6);
      const auto c = companion_of_polynomial(p);
      REQUIRE(c.size() == p.degree());
      REQUIRE(oracle::to_unit(oracle::leibniz_char(c), ring) == p);
    }
  }
}

TEST_CASE("multiplication") {
  CHECK(rw_eq(rw_mul(R("1 - 2*t"), R("1 - 3*t")), R("1 - 6*t")));
  const auto x = R("(1 - t)/(1 - 2*t)");
  CHECK(rw_eq(rw_mul(x, RationalWitt::one(Z)), x));
  CHECK(rw_eq(rw_mul(x, RationalWitt::zero(Z)), RationalWitt::zero(Z)));
  CHECK(rw_eq(rw_mul(R("1 - 3*t + 2*t^2"), R("1 - 5*t")), R("1 - 15*t + 50*t^2")));
  CHECK_THROWS_AS(rw_mul(x, R("1 - t", RingSpec::rationals())), SpecMismatch);
}

TEST_CASE("multiplication agrees with truncated Witt multiplication") {
  for (const RingSpec& ring : {Z, RingSpec::integers_mod(6), RingSpec::prime_field(5)}) {
    Generator g(4, 4, ring.modulus());
    for (int trial = 0; trial < 60; ++trial) {
      const auto x = g.rational_witt(ring, 3), y = g.rational_witt(ring, 3);
      REQUIRE(rw_expand(rw_mul(x, y), 10) == witt_mul(rw_expand(x, 10), rw_expand(y, 10)));
    }
  }
}

TEST_CASE("Frobenius and Verschiebung") {
  CHECK(rw_eq(rw_frobenius(2, R("1 - 3*t")), R("1 - 9*t")));
  CHECK(rw_eq(rw_verschiebung(2, R("1 - 3*t")), R("1 - 3*t^2")));
  CHECK(rw_eq(rw_frobenius(2, R("1 - 3*t + 2*t^2")), R("1 - 5*t + 4*t^2")));
  const auto x = R("(1 + t - t^3)/(1 - 2*t)");
  CHECK(rw_eq(rw_frobenius(1, x), x));
  CHECK_THROWS_AS(rw_frobenius(0, x), InvalidIndex);
  CHECK_THROWS_AS(rw_verschiebung(0, x), InvalidIndex);

  Generator g(5, 5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto y = g.rational_witt(Z, 3);
    const std::size_t n = g.index(1, 3), N = 9;
    REQUIRE(rw_expand(rw_verschiebung(n, y), n * N) == verschiebung(n, rw_expand(y, N)));
    REQUIRE(rw_expand(rw_frobenius(n, y), N / n) == frobenius(n, rw_expand(y, N)).truncate(N / n));
  }
}

TEST_CASE("expansion") {
  CHECK(rw_expand(R("(1)/(1 - t)"), 3) == WittVector(parse_series("1 + t + t^2 + t^3", Z, 3)));
  CHECK(rw_expand(R("1 - 2*t"), 2) == WittVector(parse_series("1 - 2*t", Z, 2)));
  Generator g(6, 6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = g.rational_witt(Z, 4), y = g.rational_witt(Z, 4);
    REQUIRE(rw_expand(x + y, 8) == rw_expand(x, 8) + rw_expand(y, 8));
    REQUIRE(rw_expand(-x, 8) == -rw_expand(x, 8));
    REQUIRE(rw_expand(x, 8).carrier() * WittVector(rw_expand(RationalWitt(x.den()), 8)).carrier() ==
            rw_expand(RationalWitt(x.num()), 8).carrier());
  }
}
