#include "wittkit/witt.hpp"

#include <algorithm>
#include <numeric>

#include "wittkit/kernels.hpp"

namespace wittkit {

WittVector WittVector::one(const RingSpec& ring, std::size_t precision) {
  return teichmuller(ring.one(), precision);
}

WittVector int_scalar(std::int64_t m, const WittVector& x) { return WittVector(x.carrier().pow(m)); }

WittVector teichmuller(const RingElement& a, std::size_t precision) {
  UnitSeries s(a.spec(), precision);
  if (precision >= 1) s.mul_by_factor(a, 1);
  return WittVector(std::move(s));
}

WittVector verschiebung(std::size_t n, const WittVector& x) {
  if (n < 1) throw InvalidIndex("Verschiebung V_n needs n >= 1, got " + std::to_string(n));
  return WittVector(x.carrier().substitute(n));
}

WittCoordinates decompose(const WittVector& x) {
  WittCoordinates out{x.ring(), {}};
  out.coords.reserve(x.precision());
  UnitSeries residual = x.carrier();
  for (std::size_t i = 1; i <= x.precision(); ++i) {
    RingElement a = -residual.coeff(i);
    residual = residual.divide_by_factor(a, i);
    out.coords.push_back(std::move(a));
  }
  return out;
}

WittVector reconstruct(const WittCoordinates& c) {
  UnitSeries s(c.ring, c.precision());
  for (std::size_t i = 1; i <= c.precision(); ++i) s.mul_by_factor(c.coords[i - 1], i);
  return WittVector(std::move(s));
}

namespace {

// acc += d * V_index([c]), i.e. acc *= (1 - c t^index)^d.
void add_scaled_teichmuller(UnitSeries& acc, const RingElement& c, std::size_t index, std::size_t d) {
  if (c.is_zero() || index > acc.precision()) return;
  for (std::size_t k = 0; k < d; ++k) acc.mul_by_factor(c, index);
}

}  // namespace

WittVector frobenius(std::size_t n, const WittVector& x) {
  if (n < 1) throw InvalidIndex("Frobenius F_n needs n >= 1, got " + std::to_string(n));
  if (n == 1) return x;
  const WittCoordinates a = decompose(x);
  UnitSeries acc(x.ring(), x.precision());
  // F_n V_m [a] = d V_{m/d} [a^{n/d}], d = gcd(n, m).
  for (std::size_t m = 1; m <= a.precision(); ++m) {
    const RingElement& am = a.coords[m - 1];
    if (am.is_zero()) continue;
    const std::size_t d = std::gcd(n, m);
    add_scaled_teichmuller(acc, am.pow(n / d), m / d, d);
  }
  return WittVector(std::move(acc));
}

WittVector operator*(const WittVector& a, const WittVector& b) { return witt_mul(a, b); }

WittVector witt_mul(const WittVector& x, const WittVector& y) {
  if (!(x.ring() == y.ring()))
    throw SpecMismatch("ring mismatch: " + x.ring().to_string() + " vs " + y.ring().to_string());
  const std::size_t n = std::min(x.precision(), y.precision());
  const WittCoordinates a = decompose(x.precision() == n ? x : x.truncate(n));
  const WittCoordinates b = decompose(y.precision() == n ? y : y.truncate(n));

  // V_i[a] * V_j[b] = d V_{ij/d} [a^{j/d} b^{i/d}], d = gcd(i, j); pairs with
  // lcm(i, j) > N only touch coefficients past t^N.
  UnitSeries acc(x.ring(), n);
  for (std::size_t i = 1; i <= n; ++i) {
    const RingElement& ai = a.coords[i - 1];
    if (ai.is_zero()) continue;
    for (std::size_t j = 1; j <= n; ++j) {
      const RingElement& bj = b.coords[j - 1];
      if (bj.is_zero()) continue;
      const std::size_t d = std::gcd(i, j);
      const std::size_t l = i / d * j;
      if (l > n) continue;
      add_scaled_teichmuller(acc, ai.pow(j / d) * bj.pow(i / d), l, d);
    }
  }
  return WittVector(std::move(acc));
}

WittVector witt_inverse_of_integer(std::int64_t l, std::size_t precision, const RingSpec& ring) {
  const RingElement lr = ring.from_int(l);
  if (l == 0 || !lr.is_unit())
    throw NotAUnit(std::to_string(l) + " is not a unit in " + ring.to_string());
  if (l < 0) return -witt_inverse_of_integer(-l, precision, ring);

  const RingElement minus_inv = -lr.inverse();
  std::vector<RingElement> a;  // a_1..a_n
  a.reserve(precision);
  if (precision >= 1) a.push_back(minus_inv);
  for (std::size_t n = 2; n <= precision; ++n) {
    // Sum over i_1+...+i_l = n with every i_k < n is [t^n] of (a_0 + ... + a_{n-1} t^{n-1})^l.
    std::vector<RingElement> known = a;
    known.push_back(ring.zero());
    const UnitSeries partial(ring, std::move(known));
    a.push_back(minus_inv * partial.pow(l).coeff(n));
  }
  return WittVector(UnitSeries(ring, std::move(a)));
}

std::vector<RingElement> ghost(const WittVector& x) {
  const WittCoordinates a = decompose(x);
  const std::size_t n = x.precision();
  std::vector<RingElement> gh(n, x.ring().zero());
  for (std::size_t d = 1; d <= n; ++d) {
    const RingElement& ad = a.coords[d - 1];
    if (ad.is_zero()) continue;
    const RingElement dr = x.ring().from_int(static_cast<long>(d));
    RingElement power = ad;
    for (std::size_t k = d; k <= n; k += d) {
      gh[k - 1] += dr * power;
      power *= ad;
    }
  }
  return gh;
}

std::vector<RingElement> ghost_log_derivative(const WittVector& x) {
  const std::size_t n = x.precision();
  const RingSpec& ring = x.ring();
  if (n == 0) return {};
  std::vector<RingElement> deriv;  // x'(t) mod t^N
  deriv.reserve(n);
  for (std::size_t k = 1; k <= n; ++k)
    deriv.push_back(ring.from_int(static_cast<long>(k)) * x.carrier().coeff(k));
  const UnitSeries inv = x.carrier().inverse();
  const auto q = kernels::mullow(deriv, inv.coefficients(), n);
  std::vector<RingElement> gh;
  gh.reserve(n);
  for (const auto& c : q) gh.push_back(-c);
  return gh;
}

std::optional<std::size_t> filtration_degree(const WittVector& x) {
  const WittCoordinates a = decompose(x);
  for (std::size_t i = 1; i <= a.precision(); ++i)
    if (!a.coords[i - 1].is_zero()) return i;
  return std::nullopt;
}

}  // namespace wittkit
