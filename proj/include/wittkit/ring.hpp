#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "wittkit/error.hpp"

namespace wittkit {

enum class RingKind { Integers, Rationals, IntegersMod, PrimeField };

class RingElement;

/*
 * A discrete commutative coefficient ring: Z, Q, Z/m or F_p.
 * The modulus is limited to 64 bits, which is plenty at desk scale.
 * PrimeField(p) and IntegersMod(p) compute identically; the former
 * additionally promises that every nonzero element is a unit.
 */
class RingSpec {
 public:
  RingSpec() = default;  // Integers

  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  static RingSpec integers_mod(std::uint64_t m);
  static RingSpec prime_field(std::uint64_t p);

  /// Parses `Z`, `Q`, `Zmod:<m>` or `Fp:<p>`, case-insensitively.
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  /// 0 for Z and Q.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }

  bool is_modular() const {
    return kind_ == RingKind::IntegersMod || kind_ == RingKind::PrimeField;
  }
  /// True when the ring has no zero divisors (Z, Q, F_p, Z/p).
  bool is_domain() const;
  bool is_torsion_free() const { return !is_modular(); }

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(long v) const;
  RingElement from_mpz(const mpz_class& v) const;
  /// Exact rational; throws NotAUnit when the denominator is not invertible.
  RingElement from_mpq(const mpq_class& v) const;

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_ = RingKind::Integers;
  std::uint64_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RingSpec& spec);

bool is_prime(std::uint64_t n);

/*
 * An exact element of a RingSpec. Representatives are canonical:
 * reduced fractions over Q, least non-negative residues over Z/m, so
 * equality is structural.
 */
class RingElement {
 public:
  RingElement() : value_(mpz_class(0)) {}

  const RingSpec& spec() const { return spec_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  /// Throws NotAUnit unless is_unit().
  RingElement inverse() const;
  RingElement pow(std::uint64_t e) const;

  /// Integer value for Z and residue rings; throws for non-integral rationals.
  const mpz_class& as_integer() const;
  /// Value as a rational number (residues map to their representative).
  mpq_class as_rational() const;

  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  RingElement operator-() const;

  friend bool operator==(const RingElement& a, const RingElement& b);

  /// Literal in the ring's input syntax, e.g. `-3`, `1/2`, `5`.
  std::string to_string() const;

 private:
  friend class RingSpec;
  RingElement(RingSpec spec, mpz_class v);
  RingElement(RingSpec spec, mpq_class v);

  void check_same(const RingElement& o) const;
  void normalize();

  RingSpec spec_;
  std::variant<mpz_class, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& x);

/// Canonical representative in [0, m) as an integer.
RingElement lift(const RingElement& x);
/// Residue of an integer modulo the target ring's modulus.
RingElement reduce(const RingElement& x, const RingSpec& target);

/// Parses a ring literal (`-3`, `7`, `1/2` over Q).
RingElement parse_element(std::string_view text, const RingSpec& spec);

}  // namespace wittkit
