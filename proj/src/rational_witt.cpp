#include "wittkit/rational_witt.hpp"

#include "wittkit/kernels.hpp"

namespace wittkit {

namespace {

UnitPolynomial tensor_char(const UnitPolynomial& p, const UnitPolynomial& q) {
  if (p.is_one() || q.is_one()) return UnitPolynomial(p.ring());
  const MatrixEndo a = companion_of_polynomial(p), b = companion_of_polynomial(q);
  return char_series(MatrixEndo(p.ring(), a.size() * b.size(),
                                kernels::kron(a.entries(), a.size(), b.entries(), b.size())));
}

}  // namespace

RationalWitt::RationalWitt(UnitPolynomial num, UnitPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.ring() == den_.ring()))
    throw SpecMismatch("ring mismatch: " + num_.ring().to_string() + " vs " + den_.ring().to_string());
}

RationalWitt RationalWitt::zero(const RingSpec& ring) { return RationalWitt(UnitPolynomial(ring)); }

RationalWitt RationalWitt::one(const RingSpec& ring) {
  return RationalWitt(UnitPolynomial(ring, {-ring.one()}));
}

RationalWitt operator+(const RationalWitt& a, const RationalWitt& b) {
  return RationalWitt(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalWitt::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool rw_eq(const RationalWitt& x, const RationalWitt& y) {
  return x.num() * y.den() == y.num() * x.den();
}

RationalWitt int_scalar(std::int64_t m, const RationalWitt& x) {
  if (m < 0) {
    const auto mag = static_cast<std::uint64_t>(-(m + 1)) + 1;
    return RationalWitt(x.den().pow(mag), x.num().pow(mag));
  }
  return RationalWitt(x.num().pow(static_cast<std::uint64_t>(m)), x.den().pow(static_cast<std::uint64_t>(m)));
}

RationalWitt rw_mul(const RationalWitt& x, const RationalWitt& y) {
  if (!(x.ring() == y.ring()))
    throw SpecMismatch("ring mismatch: " + x.ring().to_string() + " vs " + y.ring().to_string());
  // ([a] - [b]) * ([c] - [d]) = [a c] + [b d] - [a d] - [b c].
  return RationalWitt(tensor_char(x.num(), y.num()) * tensor_char(x.den(), y.den()),
                      tensor_char(x.num(), y.den()) * tensor_char(x.den(), y.num()));
}

RationalWitt rw_frobenius(std::size_t n, const RationalWitt& x) {
  if (n < 1) throw InvalidIndex("Frobenius F_n needs n >= 1, got " + std::to_string(n));
  return RationalWitt(char_series(companion_of_polynomial(x.num()).pow(n)),
                      char_series(companion_of_polynomial(x.den()).pow(n)));
}

RationalWitt rw_verschiebung(std::size_t n, const RationalWitt& x) {
  if (n < 1) throw InvalidIndex("Verschiebung V_n needs n >= 1, got " + std::to_string(n));
  return RationalWitt(x.num().substitute(n), x.den().substitute(n));
}

WittVector rw_expand(const RationalWitt& x, std::size_t precision) {
  return WittVector(x.num().to_series(precision) * x.den().to_series(precision).inverse());
}

}  // namespace wittkit
