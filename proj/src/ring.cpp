#include "wittkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>

namespace wittkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingSpec RingSpec::integers_mod(std::uint64_t m) {
  if (m < 2) throw Error("Zmod modulus must be at least 2, got " + std::to_string(m));
  return RingSpec(RingKind::IntegersMod, m);
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw Error("Fp requires a prime, got " + std::to_string(p));
  return RingSpec(RingKind::PrimeField, p);
}

namespace {

std::string lowered(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

std::uint64_t parse_modulus(std::string_view digits, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("invalid ring modulus in '" + std::string(whole) + "'", std::string(digits));
  return v;
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
  const std::string s = lowered(text);
  if (s == "z") return integers();
  if (s == "q") return rationals();
  try {
    if (s.starts_with("zmod:")) return integers_mod(parse_modulus(std::string_view(s).substr(5), text));
    if (s.starts_with("fp:")) return prime_field(parse_modulus(std::string_view(s).substr(3), text));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), std::string(text));
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q, Zmod:<m>, Fp:<p>)",
                   std::string(text));
}

bool RingSpec::is_domain() const {
  switch (kind_) {
    case RingKind::Integers:
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return true;
    case RingKind::IntegersMod:
      return is_prime(modulus_);
  }
  return false;
}

RingElement RingSpec::zero() const { return from_int(0); }
RingElement RingSpec::one() const { return from_int(1); }
RingElement RingSpec::from_int(long v) const { return from_mpz(mpz_class(v)); }

RingElement RingSpec::from_mpz(const mpz_class& v) const {
  if (kind_ == RingKind::Rationals) return RingElement(*this, mpq_class(v));
  return RingElement(*this, v);
}

RingElement RingSpec::from_mpq(const mpq_class& v) const {
  if (kind_ == RingKind::Rationals) return RingElement(*this, v);
  if (v.get_den() == 1) return from_mpz(v.get_num());
  RingElement den = from_mpz(v.get_den());
  if (!den.is_unit())
    throw NotAUnit("denominator " + v.get_den().get_str() + " is not invertible in " + to_string());
  return from_mpz(v.get_num()) * den.inverse();
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Zmod:" + std::to_string(modulus_);
    case RingKind::PrimeField: return "Fp:" + std::to_string(modulus_);
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const RingSpec& spec) { return os << spec.to_string(); }

// ---------------------------------------------------------------------------

RingElement::RingElement(RingSpec spec, mpz_class v) : spec_(spec), value_(std::move(v)) {
  normalize();
}

RingElement::RingElement(RingSpec spec, mpq_class v) : spec_(spec), value_(std::move(v)) {
  normalize();
}

void RingElement::normalize() {
  if (spec_.is_modular()) {
    auto& z = std::get<mpz_class>(value_);
    mpz_fdiv_r_ui(z.get_mpz_t(), z.get_mpz_t(), spec_.modulus());
  } else if (spec_.kind() == RingKind::Rationals) {
    std::get<mpq_class>(value_).canonicalize();
  }
}

void RingElement::check_same(const RingElement& o) const {
  if (!(spec_ == o.spec_))
    throw SpecMismatch("ring mismatch: " + spec_.to_string() + " vs " + o.spec_.to_string());
}

bool RingElement::is_zero() const {
  return std::visit([](const auto& v) { return sgn(v) == 0; }, value_);
}

bool RingElement::is_one() const {
  return std::visit([](const auto& v) { return v == 1; }, value_);
}

bool RingElement::is_unit() const {
  switch (spec_.kind()) {
    case RingKind::Integers: {
      const auto& z = std::get<mpz_class>(value_);
      return z == 1 || z == -1;
    }
    case RingKind::Rationals:
      return !is_zero();
    case RingKind::PrimeField:
      return !is_zero();
    case RingKind::IntegersMod: {
      mpz_class g;
      mpz_gcd_ui(g.get_mpz_t(), std::get<mpz_class>(value_).get_mpz_t(), spec_.modulus());
      return g == 1;
    }
  }
  return false;
}

RingElement RingElement::inverse() const {
  if (!is_unit())
    throw NotAUnit(to_string() + " is not a unit in " + spec_.to_string());
  if (spec_.kind() == RingKind::Rationals) return RingElement(spec_, mpq_class(1 / std::get<mpq_class>(value_)));
  if (spec_.kind() == RingKind::Integers) return *this;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), std::get<mpz_class>(value_).get_mpz_t(), mpz_class(spec_.modulus()).get_mpz_t());
  return RingElement(spec_, inv);
}

RingElement RingElement::pow(std::uint64_t e) const {
  if (spec_.is_modular()) {
    mpz_class r;
    mpz_powm_ui(r.get_mpz_t(), std::get<mpz_class>(value_).get_mpz_t(), e,
                mpz_class(spec_.modulus()).get_mpz_t());
    return RingElement(spec_, r);
  }
  if (spec_.kind() == RingKind::Integers) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), std::get<mpz_class>(value_).get_mpz_t(), e);
    return RingElement(spec_, r);
  }
  const auto& q = std::get<mpq_class>(value_);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), e);
  return RingElement(spec_, mpq_class(n, d));
}

const mpz_class& RingElement::as_integer() const {
  if (spec_.kind() == RingKind::Rationals) {
    const auto& q = std::get<mpq_class>(value_);
    if (q.get_den() != 1) throw Error(to_string() + " is not an integer");
    return q.get_num();
  }
  return std::get<mpz_class>(value_);
}

mpq_class RingElement::as_rational() const {
  if (spec_.kind() == RingKind::Rationals) return std::get<mpq_class>(value_);
  return mpq_class(std::get<mpz_class>(value_));
}

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same(o);
  std::visit([&](auto& v) { v += std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  if (spec_.is_modular()) normalize();
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  check_same(o);
  std::visit([&](auto& v) { v -= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  if (spec_.is_modular()) normalize();
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  check_same(o);
  std::visit([&](auto& v) { v *= std::get<std::decay_t<decltype(v)>>(o.value_); }, value_);
  if (spec_.is_modular()) normalize();
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  std::visit([](auto& v) { v = -v; }, r.value_);
  if (spec_.is_modular()) r.normalize();
  return r;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::string RingElement::to_string() const {
  return std::visit([](const auto& v) { return v.get_str(); }, value_);
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << x.to_string(); }

RingElement lift(const RingElement& x) {
  if (!x.spec().is_modular()) throw SpecMismatch("lift expects a residue ring, got " + x.spec().to_string());
  return RingSpec::integers().from_mpz(x.as_integer());
}

RingElement reduce(const RingElement& x, const RingSpec& target) {
  if (x.spec().kind() != RingKind::Integers)
    throw SpecMismatch("reduce expects an integer, got " + x.spec().to_string());
  return target.from_mpz(x.as_integer());
}

RingElement parse_element(std::string_view text, const RingSpec& spec) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto bad = [&] { return ParseError("invalid " + spec.to_string() + " literal '" + std::string(text) + "'", std::string(text)); };
  if (s.empty()) throw bad();

  auto valid_int = [](std::string_view d) {
    std::size_t i = (!d.empty() && (d[0] == '-' || d[0] == '+')) ? 1 : 0;
    if (i == d.size()) return false;
    return std::all_of(d.begin() + static_cast<long>(i), d.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto to_mpz = [](std::string d) {
    if (d[0] == '+') d.erase(0, 1);
    return mpz_class(d, 10);
  };

  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw bad();
    return spec.from_mpz(to_mpz(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  const mpz_class d = to_mpz(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", std::string(text));
  if (spec.kind() == RingKind::Integers && to_mpz(num) % d != 0) throw bad();
  mpq_class q(to_mpz(num), d);
  q.canonicalize();
  try {
    return spec.from_mpq(q);
  } catch (const NotAUnit&) {
    throw bad();
  }
}

}  // namespace wittkit
