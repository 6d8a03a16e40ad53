#include "wittkit/series.hpp"

#include <algorithm>

#include "wittkit/kernels.hpp"

namespace wittkit {

namespace {

void check_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw SpecMismatch("ring mismatch: " + a.to_string() + " vs " + b.to_string());
}

void check_elements(const RingSpec& ring, std::span<const RingElement> coeffs) {
  for (const auto& c : coeffs) check_ring(ring, c.spec());
}

}  // namespace

std::string format_unit_coefficients(std::span<const RingElement> coeffs) {
  std::string out = "1";
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    std::string mag = coeffs[k].to_string();
    const bool negative = mag.front() == '-';
    if (negative) mag.erase(0, 1);
    out += negative ? " - " : " + ";
    if (mag != "1") out += mag + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

// --- UnitPolynomial --------------------------------------------------------

UnitPolynomial::UnitPolynomial(RingSpec ring) : ring_(ring), coeffs_{ring.one()} {}

UnitPolynomial::UnitPolynomial(RingSpec ring, std::vector<RingElement> coeffs) : ring_(ring) {
  check_elements(ring, coeffs);
  coeffs_.reserve(coeffs.size() + 1);
  coeffs_.push_back(ring.one());
  for (auto& c : coeffs) coeffs_.push_back(std::move(c));
  strip();
}

void UnitPolynomial::strip() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElement UnitPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ring_.zero();
}

UnitPolynomial operator*(const UnitPolynomial& a, const UnitPolynomial& b) {
  check_ring(a.ring_, b.ring_);
  UnitPolynomial r(a.ring_);
  r.coeffs_ = kernels::mullow(a.coeffs_, b.coeffs_, a.coeffs_.size() + b.coeffs_.size() - 1);
  r.strip();
  return r;
}

UnitPolynomial UnitPolynomial::pow(std::uint64_t e) const {
  UnitPolynomial result(ring_), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UnitPolynomial UnitPolynomial::substitute(std::size_t n) const {
  if (n < 1) throw InvalidIndex("substitution t -> t^n needs n >= 1");
  UnitPolynomial r(ring_);
  r.coeffs_.assign(degree() * n + 1, ring_.zero());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k * n] = coeffs_[k];
  return r;
}

UnitSeries UnitPolynomial::to_series(std::size_t n) const {
  std::vector<RingElement> c(n, ring_.zero());
  for (std::size_t k = 1; k <= std::min(n, degree()); ++k) c[k - 1] = coeffs_[k];
  return UnitSeries(ring_, std::move(c));
}

std::string UnitPolynomial::to_string() const { return format_unit_coefficients(coeffs_); }

// --- UnitSeries ------------------------------------------------------------

UnitSeries::UnitSeries(RingSpec ring, std::size_t precision)
    : ring_(ring), c_(precision + 1, ring.zero()) {
  c_[0] = ring.one();
}

UnitSeries::UnitSeries(RingSpec ring, std::vector<RingElement> coeffs) : ring_(ring) {
  check_elements(ring, coeffs);
  c_.reserve(coeffs.size() + 1);
  c_.push_back(ring.one());
  for (auto& c : coeffs) c_.push_back(std::move(c));
}

bool UnitSeries::is_one() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const RingElement& x) { return x.is_zero(); });
}

UnitSeries operator*(const UnitSeries& a, const UnitSeries& b) {
  check_ring(a.ring_, b.ring_);
  const std::size_t n = std::min(a.precision(), b.precision());
  UnitSeries r(a.ring_, n);
  r.c_ = kernels::mullow(std::span(a.c_).first(n + 1), std::span(b.c_).first(n + 1), n + 1);
  return r;
}

UnitSeries UnitSeries::inverse() const {
  const std::size_t n = precision();
  UnitSeries r(ring_, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RingElement acc = ring_.zero();
    for (std::size_t j = 1; j <= k; ++j)
      if (!c_[j].is_zero() && !r.c_[k - j].is_zero()) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc;
  }
  return r;
}

UnitSeries UnitSeries::pow(std::int64_t e) const {
  if (e < 0) {
    // Avoid negating INT64_MIN.
    const auto mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
    UnitSeries base = inverse(), result(ring_, precision());
    for (std::uint64_t m = mag; m > 0; m >>= 1) {
      if (m & 1) result *= base;
      if (m > 1) base *= base;
    }
    return result;
  }
  UnitSeries base = *this, result(ring_, precision());
  for (auto m = static_cast<std::uint64_t>(e); m > 0; m >>= 1) {
    if (m & 1) result *= base;
    if (m > 1) base *= base;
  }
  return result;
}

UnitSeries UnitSeries::substitute(std::size_t n) const {
  if (n < 1) throw InvalidIndex("substitution t -> t^n needs n >= 1");
  UnitSeries r(ring_, precision() * n);
  for (std::size_t k = 1; k <= precision(); ++k) r.c_[k * n] = c_[k];
  return r;
}

UnitSeries UnitSeries::truncate(std::size_t n) const {
  if (n > precision())
    throw Error("cannot truncate precision " + std::to_string(precision()) + " series to " +
                std::to_string(n));
  UnitSeries r(ring_, n);
  std::copy_n(c_.begin(), n + 1, r.c_.begin());
  return r;
}

UnitSeries UnitSeries::divide_by_factor(const RingElement& a, std::size_t i) const {
  if (i < 1) throw InvalidIndex("factor 1 - a t^i needs i >= 1");
  check_ring(ring_, a.spec());
  UnitSeries q = *this;
  if (a.is_zero()) return q;
  for (std::size_t k = i; k <= precision(); ++k)
    if (!q.c_[k - i].is_zero()) q.c_[k] += a * q.c_[k - i];
  return q;
}

void UnitSeries::mul_by_factor(const RingElement& a, std::size_t i) {
  if (i < 1) throw InvalidIndex("factor 1 - a t^i needs i >= 1");
  check_ring(ring_, a.spec());
  if (a.is_zero()) return;
  for (std::size_t k = precision(); k >= i; --k)
    if (!c_[k - i].is_zero()) c_[k] -= a * c_[k - i];
}

UnitPolynomial UnitSeries::to_polynomial() const {
  return UnitPolynomial(ring_, std::vector<RingElement>(c_.begin() + 1, c_.end()));
}

}  // namespace wittkit
