#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wittkit/ring.hpp"

namespace wittkit {

class UnitSeries;

/*
 * A polynomial 1 + c_1 t + ... + c_d t^d. Trailing zeros are stripped,
 * so the empty coefficient list is the polynomial 1.
 */
class UnitPolynomial {
 public:
  explicit UnitPolynomial(RingSpec ring);
  /// `coeffs` are c_1..c_d (constant term implied).
  UnitPolynomial(RingSpec ring, std::vector<RingElement> coeffs);

  const RingSpec& ring() const { return ring_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  /// Coefficient of t^k; 1 for k = 0, zero beyond the degree.
  RingElement coeff(std::size_t k) const;
  /// All coefficients c_0..c_d, c_0 == 1.
  std::span<const RingElement> coefficients() const { return coeffs_; }

  bool is_one() const { return coeffs_.size() == 1; }

  friend UnitPolynomial operator*(const UnitPolynomial& a, const UnitPolynomial& b);
  UnitPolynomial pow(std::uint64_t e) const;
  /// p(t^n).
  UnitPolynomial substitute(std::size_t n) const;
  /// Exact expansion as a series of precision n (zeros past the degree are genuine).
  UnitSeries to_series(std::size_t n) const;

  friend bool operator==(const UnitPolynomial& a, const UnitPolynomial& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  /// `1 - 3*t + 2*t^2`
  std::string to_string() const;

 private:
  void strip();

  RingSpec ring_;
  std::vector<RingElement> coeffs_;  // coeffs_[0] == 1
};

/*
 * A power series with constant term 1, known modulo t^{N+1}: the carrier
 * of the truncated big Witt vectors. Binary operations return the smaller
 * precision; nothing is ever padded with invented zeros.
 */
class UnitSeries {
 public:
  /// The series 1 at precision n.
  UnitSeries(RingSpec ring, std::size_t precision);
  /// `coeffs` are c_1..c_N; precision is coeffs.size().
  UnitSeries(RingSpec ring, std::vector<RingElement> coeffs);

  const RingSpec& ring() const { return ring_; }
  std::size_t precision() const { return c_.size() - 1; }
  const RingElement& coeff(std::size_t k) const { return c_.at(k); }
  /// c_0..c_N.
  std::span<const RingElement> coefficients() const { return c_; }
  bool is_one() const;

  friend UnitSeries operator*(const UnitSeries& a, const UnitSeries& b);
  UnitSeries& operator*=(const UnitSeries& b) { return *this = *this * b; }
  UnitSeries inverse() const;
  /// Binary powering; negative exponents go through inverse().
  UnitSeries pow(std::int64_t e) const;

  /// x(t^n), precision n*N.
  UnitSeries substitute(std::size_t n) const;
  UnitSeries truncate(std::size_t precision) const;
  /// q with q * (1 - a t^i) = x mod t^{N+1}.
  UnitSeries divide_by_factor(const RingElement& a, std::size_t i) const;
  /// In place x *= (1 - a t^i).
  void mul_by_factor(const RingElement& a, std::size_t i);
  /// Polynomial of degree <= N with the same coefficients.
  UnitPolynomial to_polynomial() const;

  static UnitSeries from_polynomial(const UnitPolynomial& p, std::size_t precision) {
    return p.to_series(precision);
  }

  friend bool operator==(const UnitSeries& a, const UnitSeries& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

  std::string to_string() const { return to_polynomial().to_string(); }

 private:
  RingSpec ring_;
  std::vector<RingElement> c_;  // c_[0] == 1
};

/// Common text form for 1 + sum c_k t^k.
std::string format_unit_coefficients(std::span<const RingElement> coeffs);

}  // namespace wittkit
