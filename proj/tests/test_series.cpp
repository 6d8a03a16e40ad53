#include <doctest.h>

#include "oracles.hpp"
#include "wittkit/parse.hpp"
#include "wittkit/random.hpp"
#include "wittkit/series.hpp"

using namespace wittkit;

namespace {

const RingSpec Z = RingSpec::integers();

UnitSeries S(const char* text, std::size_t n, const RingSpec& ring = Z) { return parse_series(text, ring, n); }

const std::vector<RingSpec>& test_rings() {
  static const std::vector<RingSpec> rings{Z, RingSpec::rationals(), RingSpec::integers_mod(6),
                                           RingSpec::prime_field(2), RingSpec::prime_field(5)};
  return rings;
}

}  // namespace

TEST_CASE("series products and inverses") {
  CHECK(S("1 - t", 2) * S("1 - 2*t", 2) == S("1 - 3*t + 2*t^2", 2));
  CHECK(S("1 - t", 3).inverse() == S("1 + t + t^2 + t^3", 3));
  const auto f2 = RingSpec::prime_field(2);
  // (1 - t)^2 = 1 - 2t + t^2 = 1 + t^2 mod 2
  CHECK(S("1 - t", 2, f2).pow(2) == S("1 + t^2", 2, f2));
  CHECK(S("1 - t", 4).pow(-1) == S("1 - t", 4).inverse());
  CHECK(S("1 - t", 4).pow(-2) == S("1 + 2*t + 3*t^2 + 4*t^3 + 5*t^4", 4));
  CHECK(S("1 + 5*t", 3).pow(0).is_one());
}

TEST_CASE("binary operations return the smaller precision") {
  const auto a = S("1 + t", 5), b = S("1 + t", 2);
  CHECK((a * b).precision() == 2);
  CHECK((b * a) == S("1 + 2*t + t^2", 2));
  CHECK_THROWS_AS(a * S("1 + t", 5, RingSpec::rationals()), SpecMismatch);
}

TEST_CASE("substitution, truncation and division by a factor") {
  const auto v = S("1 - 3*t", 1).substitute(2);
  CHECK(v.precision() == 2);
  CHECK(v == S("1 - 3*t^2", 2));
  CHECK(S("1 - 3*t + 2*t^2", 2).truncate(1) == S("1 - 3*t", 1));
  CHECK_THROWS(S("1 - t", 2).truncate(3));

  // (1 - t)(1 - t^2) = 1 - t - t^2 + t^3: dividing the truncation by 1 - t leaves 1 - t^2.
  const auto x = S("1 - t - t^2", 2);
  oracle::Poly product = oracle::poly_mul({Z.one(), -Z.one()}, {Z.one(), Z.zero(), -Z.one()}, Z);
  REQUIRE(product == oracle::Poly{Z.one(), -Z.one(), -Z.one(), Z.one()});
  const auto q = x.divide_by_factor(Z.one(), 1);
  CHECK(q == S("1 - t^2", 2));
  auto back = q;
  back.mul_by_factor(Z.one(), 1);
  CHECK(back == x);

  CHECK_THROWS_AS(x.substitute(0), InvalidIndex);
  CHECK_THROWS_AS(x.divide_by_factor(Z.one(), 0), InvalidIndex);
}

TEST_CASE("series multiplication matches the schoolbook oracle") {
  for (const auto& ring : test_rings()) {
    Generator g(5, 17, ring.modulus());
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = g.series(ring, 9), b = g.series(ring, 9);
      REQUIRE(oracle::coeffs(a * b) == oracle::series_mul(oracle::coeffs(a), oracle::coeffs(b), 9, ring));
    }
  }
}

TEST_CASE("series group laws on random inputs") {
  for (const auto& ring : test_rings()) {
    CAPTURE(ring.to_string());
    Generator g(99, 1, ring.modulus());
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t n = g.index(0, 10);
      const auto x = g.series(ring, n), y = g.series(ring, n), z = g.series(ring, n);
      REQUIRE((x * y) * z == x * (y * z));
      REQUIRE(x * y == y * x);
      REQUIRE(x * UnitSeries(ring, n) == x);
    }
  }
}

TEST_CASE("inverse is an involution at every precision up to 16") {
  for (const auto& ring : test_rings()) {
    Generator g(3, 3, ring.modulus());
    for (std::size_t n = 0; n <= 16; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        const auto x = g.series(ring, n);
        REQUIRE(x.inverse().inverse() == x);
        REQUIRE((x * x.inverse()).is_one());
      }
  }
}

TEST_CASE("dividing out a factor undoes multiplying by it") {
  for (const auto& ring : test_rings()) {
    Generator g(4, 4, ring.modulus());
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = g.index(1, 12), i = g.index(1, n);
      const auto x = g.series(ring, n);
      const auto a = g.element(ring);
      auto y = x;
      y.mul_by_factor(a, i);
      REQUIRE(y.divide_by_factor(a, i) == x);
      REQUIRE(y == x * UnitPolynomial(ring, [&] {
                       std::vector<RingElement> c(i, ring.zero());
                       c[i - 1] = -a;
                       return c;
                     }()).to_series(n));
    }
  }
}

TEST_CASE("unit polynomials") {
  const auto p = parse_polynomial("1 - 3*t + 2*t^2", Z);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(5).is_zero());
  CHECK(parse_polynomial("1 + 0*t^3", Z).is_one());
  CHECK(p * parse_polynomial("1 - 5*t", Z) == parse_polynomial("1 - 8*t + 17*t^2 - 10*t^3", Z));
  CHECK(p.substitute(3) == parse_polynomial("1 - 3*t^3 + 2*t^6", Z));
  CHECK(parse_polynomial("1 - t", Z).pow(3) == parse_polynomial("1 - 3*t + 3*t^2 - t^3", Z));
  CHECK(p.to_series(1) == S("1 - 3*t", 1));
  CHECK(p.to_series(4) == S("1 - 3*t + 2*t^2", 4));
  CHECK(p.to_series(4).to_polynomial() == p);
  // zero-divisor coefficients strip correctly
  const auto m6 = RingSpec::integers_mod(6);
  CHECK((parse_polynomial("1 + 2*t", m6) * parse_polynomial("1 + 3*t", m6)) == parse_polynomial("1 + 5*t", m6));
}
