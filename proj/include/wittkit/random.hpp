#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "wittkit/matrix.hpp"
#include "wittkit/rational_witt.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

/*
 * Deterministic source of random ring data. Each (seed, stream, trial)
 * triple gives an independent generator, so trials can run in any order
 * or on any thread and still reproduce.
 *
 * Coefficient window: integers in [-9, 9]; rationals n/d with n in [-9, 9]
 * and d in [1, 9]; the full residue range for Z/m and F_p.
 */
class Generator {
 public:
  Generator(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial);

  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t lo, std::size_t hi) {
    return static_cast<std::size_t>(integer(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
  }

  RingElement element(const RingSpec& ring);
  RingElement unit(const RingSpec& ring);
  UnitSeries series(const RingSpec& ring, std::size_t precision);
  WittVector witt(const RingSpec& ring, std::size_t precision) { return WittVector(series(ring, precision)); }
  /// Degree drawn from [0, max_degree] (trailing zeros may lower it further).
  UnitPolynomial polynomial(const RingSpec& ring, std::size_t max_degree);
  RationalWitt rational_witt(const RingSpec& ring, std::size_t max_degree);
  /// Size drawn from [min_size, max_size].
  MatrixEndo matrix(const RingSpec& ring, std::size_t min_size, std::size_t max_size);

 private:
  std::mt19937_64 rng_;
};

}  // namespace wittkit
