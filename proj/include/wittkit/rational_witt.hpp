#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "wittkit/matrix.hpp"
#include "wittkit/witt.hpp"

namespace wittkit {

/*
 * A rational Witt vector num/den with both constant terms 1, an element of
 * W_0(R) inside W(R). Fractions are never reduced (no polynomial gcd over
 * rings with zero divisors); equality is cross-multiplication.
 */
class RationalWitt {
 public:
  RationalWitt(UnitPolynomial num, UnitPolynomial den);
  explicit RationalWitt(UnitPolynomial num) : RationalWitt(num, UnitPolynomial(num.ring())) {}

  static RationalWitt zero(const RingSpec& ring);
  static RationalWitt one(const RingSpec& ring);

  const RingSpec& ring() const { return num_.ring(); }
  const UnitPolynomial& num() const { return num_; }
  const UnitPolynomial& den() const { return den_; }

  /// Witt sum: product of fractions.
  friend RationalWitt operator+(const RationalWitt& a, const RationalWitt& b);
  RationalWitt operator-() const { return RationalWitt(den_, num_); }
  friend RationalWitt operator-(const RationalWitt& a, const RationalWitt& b) { return a + (-b); }

  /// Structural equality of the stored pair; use rw_eq for equality in W_0.
  bool same_representation(const RationalWitt& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// `(<num>)/(<den>)`, or the bare numerator when den == 1.
  std::string to_string() const;

 private:
  UnitPolynomial num_, den_;
};

bool rw_eq(const RationalWitt& x, const RationalWitt& y);

RationalWitt int_scalar(std::int64_t m, const RationalWitt& x);

/// Exact product through companion realizations and Kronecker products.
RationalWitt rw_mul(const RationalWitt& x, const RationalWitt& y);

RationalWitt rw_frobenius(std::size_t n, const RationalWitt& x);
RationalWitt rw_verschiebung(std::size_t n, const RationalWitt& x);

/// num * den^{-1} as an element of W_N(R).
WittVector rw_expand(const RationalWitt& x, std::size_t precision);

}  // namespace wittkit
