#include "wittkit/random.hpp"

namespace wittkit {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Generator::Generator(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
    : rng_(seeded(seed, stream, trial)) {}

std::int64_t Generator::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
}

RingElement Generator::element(const RingSpec& ring) {
  switch (ring.kind()) {
    case RingKind::Integers:
      return ring.from_int(integer(-9, 9));
    case RingKind::Rationals:
      return ring.from_mpq(mpq_class(integer(-9, 9), integer(1, 9)));
    case RingKind::IntegersMod:
    case RingKind::PrimeField: {
      const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, ring.modulus() - 1)(rng_);
      mpz_class v;
      mpz_import(v.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
      return ring.from_mpz(v);
    }
  }
  return ring.zero();
}

RingElement Generator::unit(const RingSpec& ring) {
  for (;;) {
    RingElement x = element(ring);
    if (x.is_unit()) return x;
  }
}

UnitSeries Generator::series(const RingSpec& ring, std::size_t precision) {
  std::vector<RingElement> c;
  c.reserve(precision);
  for (std::size_t k = 0; k < precision; ++k) c.push_back(element(ring));
  return UnitSeries(ring, std::move(c));
}

UnitPolynomial Generator::polynomial(const RingSpec& ring, std::size_t max_degree) {
  const std::size_t d = index(0, max_degree);
  std::vector<RingElement> c;
  c.reserve(d);
  for (std::size_t k = 0; k < d; ++k) c.push_back(element(ring));
  return UnitPolynomial(ring, std::move(c));
}

RationalWitt Generator::rational_witt(const RingSpec& ring, std::size_t max_degree) {
  UnitPolynomial num = polynomial(ring, max_degree);
  UnitPolynomial den = polynomial(ring, max_degree);
  return RationalWitt(std::move(num), std::move(den));
}

MatrixEndo Generator::matrix(const RingSpec& ring, std::size_t min_size, std::size_t max_size) {
  const std::size_t n = index(min_size, max_size);
  std::vector<RingElement> e;
  e.reserve(n * n);
  for (std::size_t k = 0; k < n * n; ++k) e.push_back(element(ring));
  return MatrixEndo(ring, n, std::move(e));
}

}  // namespace wittkit
