#include <doctest.h>

#include "wittkit/kernels.hpp"
#include "wittkit/random.hpp"

using namespace wittkit;

namespace {

std::vector<RingElement> random_entries(Generator& g, const RingSpec& ring, std::size_t n) {
  std::vector<RingElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(g.element(ring));
  return out;
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree") {
  for (const RingSpec& ring : {RingSpec::integers(), RingSpec::rationals(), RingSpec::integers_mod(12)}) {
    Generator g(30, 30, ring.modulus());
    for (std::size_t n : {0u, 1u, 2u, 7u, 33u, 130u}) {
      const auto a = random_entries(g, ring, n), b = random_entries(g, ring, n);
      for (std::size_t len : {std::size_t{0}, n, 2 * n}) {
        const auto s = kernels::serial::mullow(a, b, len);
        REQUIRE(s == kernels::omp::mullow(a, b, len));
        REQUIRE(s == kernels::mullow(a, b, len));
      }
    }
    for (std::size_t n : {0u, 1u, 3u, 9u, 24u}) {
      const auto a = random_entries(g, ring, n * n), b = random_entries(g, ring, n * n);
      REQUIRE(kernels::serial::matmul(a, b, n) == kernels::omp::matmul(a, b, n));
    }
    for (std::size_t r : {0u, 1u, 3u, 6u})
      for (std::size_t s : {0u, 2u, 5u}) {
        const auto a = random_entries(g, ring, r * r), b = random_entries(g, ring, s * s);
        REQUIRE(kernels::serial::kron(a, r, b, s) == kernels::omp::kron(a, r, b, s));
      }
  }
}

TEST_CASE("serial kernels on small hand-checked inputs") {
  const auto Z = RingSpec::integers();
  const std::vector<RingElement> a{Z.from_int(1), Z.from_int(2)}, b{Z.from_int(3), Z.from_int(4)};
  CHECK(kernels::serial::mullow(a, b, 3) == std::vector<RingElement>{Z.from_int(3), Z.from_int(10), Z.from_int(8)});
  CHECK(kernels::serial::mullow(a, b, 1) == std::vector<RingElement>{Z.from_int(3)});
  // [[1,2],[3,4]]^2 = [[7,10],[15,22]]
  const std::vector<RingElement> m{Z.from_int(1), Z.from_int(2), Z.from_int(3), Z.from_int(4)};
  CHECK(kernels::serial::matmul(m, m, 2) ==
        std::vector<RingElement>{Z.from_int(7), Z.from_int(10), Z.from_int(15), Z.from_int(22)});
  const std::vector<RingElement> two{Z.from_int(2)};
  CHECK(kernels::serial::kron(two, 1, m, 2) ==
        std::vector<RingElement>{Z.from_int(2), Z.from_int(4), Z.from_int(6), Z.from_int(8)});
}
