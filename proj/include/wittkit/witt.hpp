#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wittkit/series.hpp"

namespace wittkit {

/*
 * Truncated big Witt vectors W_N(R), carried by unit series 1 + t R[[t]]
 * modulo t^{N+1}. Witt addition is series multiplication, so the Witt zero
 * is the series 1 and the Witt one is 1 - t.
 *
 * Multiplication and Frobenius go through the unique factorization
 *
 *     x = prod_{i=1..N} (1 - a_i t^i) = sum_i V_i([a_i])
 *
 * and the interchange rules for V and F on Teichmueller elements, which are
 * valid over any commutative ring. Ghost components are only an oracle.
 */
class WittVector {
 public:
  explicit WittVector(UnitSeries carrier) : carrier_(std::move(carrier)) {}

  static WittVector zero(const RingSpec& ring, std::size_t precision) {
    return WittVector(UnitSeries(ring, precision));
  }
  static WittVector one(const RingSpec& ring, std::size_t precision);

  const UnitSeries& carrier() const { return carrier_; }
  const RingSpec& ring() const { return carrier_.ring(); }
  std::size_t precision() const { return carrier_.precision(); }

  WittVector truncate(std::size_t precision) const { return WittVector(carrier_.truncate(precision)); }

  friend WittVector operator+(const WittVector& a, const WittVector& b) {
    return WittVector(a.carrier_ * b.carrier_);
  }
  friend WittVector operator-(const WittVector& a, const WittVector& b) {
    return WittVector(a.carrier_ * b.carrier_.inverse());
  }
  WittVector operator-() const { return WittVector(carrier_.inverse()); }
  friend WittVector operator*(const WittVector& a, const WittVector& b);

  friend bool operator==(const WittVector& a, const WittVector& b) { return a.carrier_ == b.carrier_; }

  std::string to_string() const { return carrier_.to_string(); }

 private:
  UnitSeries carrier_;
};

/// Coordinates a_1..a_N with x = prod (1 - a_i t^i); coords[0] is a_1.
struct WittCoordinates {
  RingSpec ring;
  std::vector<RingElement> coords;

  std::size_t precision() const { return coords.size(); }
  friend bool operator==(const WittCoordinates&, const WittCoordinates&) = default;
};

/// m-fold Witt sum, i.e. carrier^m; negative m negates first.
WittVector int_scalar(std::int64_t m, const WittVector& x);

/// [a] = 1 - a t.
WittVector teichmuller(const RingElement& a, std::size_t precision);

/// V_n: t -> t^n on the carrier; output precision n*N.
WittVector verschiebung(std::size_t n, const WittVector& x);

WittCoordinates decompose(const WittVector& x);
WittVector reconstruct(const WittCoordinates& c);

/*
 * F_n. The result keeps the input precision N and is exactly F_n applied to
 * the polynomial prod_{i<=N} (1 - a_i t^i). Only the first floor(N/n)
 * coefficients are independent of the discarded tail; callers that need
 * F_n correct to precision K pass an input of precision n*K.
 */
WittVector frobenius(std::size_t n, const WittVector& x);

/// Witt product; both operands must have the same precision.
WittVector witt_mul(const WittVector& x, const WittVector& y);

/// The series a with a^l = 1 - t, i.e. l^{-1} in W_N(R). Throws NotAUnit when l is not a unit.
WittVector witt_inverse_of_integer(std::int64_t l, std::size_t precision, const RingSpec& ring);

/// gh_n = sum_{d|n} d a_d^{n/d}, n = 1..N.
std::vector<RingElement> ghost(const WittVector& x);
/// The coefficients of -t x'(t)/x(t). Same values as ghost() by a different route.
std::vector<RingElement> ghost_log_derivative(const WittVector& x);

/// Least i with a_i != 0, or nullopt for the Witt zero.
std::optional<std::size_t> filtration_degree(const WittVector& x);

}  // namespace wittkit
