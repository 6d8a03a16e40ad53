#include <doctest.h>

#include "wittkit/parse.hpp"
#include "wittkit/random.hpp"

using namespace wittkit;

namespace {

const RingSpec Z = RingSpec::integers();

std::string token_of(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.token();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("polynomial grammar") {
  const auto p = parse_polynomial("1 - 3*t + 2*t^2", Z);
  CHECK(p.degree() == 2);
  CHECK(p.coeff(1) == Z.from_int(-3));
  CHECK(parse_polynomial("1-3t+2t^2", Z) == p);
  CHECK(parse_polynomial("  1 +2 t^2 - 3 t ", Z) == p);
  CHECK(parse_polynomial("t^2 + 1 - t - 2*t + t^2", Z) == p);
  CHECK(parse_polynomial("1", Z).is_one());
  CHECK(parse_polynomial("1 + t - t", Z).is_one());
  CHECK(parse_polynomial("1 - 1/2*t", RingSpec::rationals()).coeff(1) == RingSpec::rationals().from_mpq(mpq_class(-1, 2)));
  CHECK(parse_polynomial("1 + 7*t", RingSpec::integers_mod(6)).coeff(1) == RingSpec::integers_mod(6).one());
  CHECK(parse_polynomial("3 - 2 + t", Z).coeff(1) == Z.one());
  CHECK(p.to_string() == "1 - 3*t + 2*t^2");
}

TEST_CASE("polynomial errors name the offending token") {
  CHECK(token_of([] { parse_polynomial("2 - t", Z); }) == "2");
  CHECK(token_of([] { parse_polynomial("1 - t^", Z); }) != "<no error>");
  CHECK(token_of([] { parse_polynomial("1 + x", Z); }) == "x");
  CHECK(token_of([] { parse_polynomial("", Z); }) != "<no error>");
  CHECK(token_of([] { parse_polynomial("1 + t^99999999", Z); }) != "<no error>");
  CHECK(token_of([] { parse_polynomial("1 + 1/2*t", Z); }) != "<no error>");
  CHECK_THROWS_AS(parse_polynomial("1 + 1/3*t", RingSpec::integers_mod(6)), ParseError);
  CHECK(parse_polynomial("1 + 1/5*t", RingSpec::integers_mod(6)).coeff(1) == RingSpec::integers_mod(6).from_int(5));
}

TEST_CASE("series read a polynomial at a precision") {
  const auto s = parse_series("1 - 3*t + 2*t^2", Z, 1);
  CHECK(s.precision() == 1);
  CHECK(s.to_string() == "1 - 3*t");
  CHECK(parse_series("1 - t", Z, 4).precision() == 4);
}

TEST_CASE("fractions") {
  const auto x = parse_rational_witt("(1 - t)/(1 - 2*t)", Z);
  CHECK(x.num() == parse_polynomial("1 - t", Z));
  CHECK(x.den() == parse_polynomial("1 - 2*t", Z));
  CHECK(x.to_string() == "(1 - t)/(1 - 2*t)");
  CHECK(parse_rational_witt("1 - t", Z).den().is_one());
  CHECK(parse_rational_witt("(1 - t)", Z).to_string() == "1 - t");
  CHECK_THROWS_AS(parse_rational_witt("(1 - t)/", Z), ParseError);
  CHECK_THROWS_AS(parse_rational_witt("(1 - t", Z), ParseError);
}

TEST_CASE("matrices and lists") {
  const auto m = parse_matrix("[[1, 1], [0, 2]]", Z);
  CHECK(m.size() == 2);
  CHECK(m(1, 1) == Z.from_int(2));
  CHECK(parse_matrix("[]", Z).size() == 0);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]", Z), ParseError);
  CHECK_THROWS_AS(parse_matrix("[[1,2]]", Z), ParseError);
  CHECK_THROWS_AS(parse_matrix("[[1,2],[3,4]] x", Z), ParseError);
  CHECK(parse_matrix("[[3]]", RingSpec::integers_mod(4)) == parse_matrix("[[-1]]", RingSpec::integers_mod(4)));

  const auto xs = parse_element_list("[1, 0, -3]", Z);
  CHECK(xs.size() == 3);
  CHECK(format_element_list(xs) == "[1, 0, -3]");
  CHECK(parse_element_list("[]", Z).empty());
}

TEST_CASE("printed values parse back") {
  for (const RingSpec& ring : {Z, RingSpec::rationals(), RingSpec::integers_mod(10), RingSpec::prime_field(7)}) {
    CAPTURE(ring.to_string());
    Generator g(40, 40, ring.modulus());
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = g.polynomial(ring, 6);
      REQUIRE(parse_polynomial(p.to_string(), ring) == p);
      const auto s = g.series(ring, 7);
      REQUIRE(parse_series(s.to_string(), ring, 7) == s);
      const auto x = g.rational_witt(ring, 3);
      REQUIRE(parse_rational_witt(x.to_string(), ring).same_representation(x));
      const auto m = g.matrix(ring, 0, 4);
      REQUIRE(parse_matrix(m.to_string(), ring) == m);
      std::vector<RingElement> xs;
      for (std::size_t i = 0; i < 4; ++i) xs.push_back(g.element(ring));
      REQUIRE(parse_element_list(format_element_list(xs), ring) == xs);
    }
  }
}
