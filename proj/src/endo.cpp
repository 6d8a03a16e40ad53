#include "wittkit/endo.hpp"

#include <bit>

#include "wittkit/kernels.hpp"

namespace wittkit {

namespace {

void check_ring(const MatrixEndo& a, const MatrixEndo& b) {
  if (!(a.ring() == b.ring()))
    throw SpecMismatch("ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

MatrixEndo endo_frobenius(std::size_t l, const MatrixEndo& phi) {
  if (l < 1) throw InvalidIndex("categorical Frobenius needs l >= 1, got " + std::to_string(l));
  return phi.pow(l);
}

MatrixEndo endo_verschiebung(std::size_t l, const MatrixEndo& phi) {
  if (l < 1) throw InvalidIndex("categorical Verschiebung needs l >= 1, got " + std::to_string(l));
  const std::size_t r = phi.size(), n = l * r;
  MatrixEndo m(phi.ring(), n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, (l - 1) * r + j) = phi(i, j);
  for (std::size_t b = 1; b < l; ++b)
    for (std::size_t i = 0; i < r; ++i) m(b * r + i, (b - 1) * r + i) = phi.ring().one();
  return m;
}

MatrixEndo endo_tensor(const MatrixEndo& phi, const MatrixEndo& psi) {
  check_ring(phi, psi);
  return MatrixEndo(phi.ring(), phi.size() * psi.size(),
                    kernels::kron(phi.entries(), phi.size(), psi.entries(), psi.size()));
}

MatrixEndo endo_direct_sum(const MatrixEndo& phi, const MatrixEndo& psi) {
  check_ring(phi, psi);
  const std::size_t r = phi.size(), s = psi.size();
  MatrixEndo m(phi.ring(), r + s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = phi(i, j);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) m(r + i, r + j) = psi(i, j);
  return m;
}

std::size_t default_nilpotency_cutoff(const MatrixEndo& phi) {
  const std::size_t r = std::max<std::size_t>(phi.size(), 1);
  if (phi.ring().kind() != RingKind::IntegersMod) return r;
  const std::uint64_t m = phi.ring().modulus();
  const std::size_t log2m = static_cast<std::size_t>(std::bit_width(m - 1));  // ceil(log2 m)
  return 4 * r * std::max<std::size_t>(log2m, 1);
}

std::optional<std::size_t> nilpotency_index(const MatrixEndo& phi, std::size_t cutoff) {
  if (cutoff < 1) throw Error("nilpotency cutoff must be at least 1");
  MatrixEndo power = phi;
  for (std::size_t n = 1; n <= cutoff; ++n) {
    if (power.is_zero()) return n;
    if (n < cutoff) power = power * phi;
  }
  return std::nullopt;
}

std::optional<std::size_t> nilpotency_index(const MatrixEndo& phi) {
  return nilpotency_index(phi, default_nilpotency_cutoff(phi));
}

std::string K0Class::to_string() const { return "(" + std::to_string(rank) + ", " + witt.to_string() + ")"; }

K0Class k0_class(const MatrixEndo& phi) {
  return K0Class{static_cast<std::int64_t>(phi.size()), RationalWitt(char_series(phi))};
}

K0Class k0_unit(const RingSpec& ring) { return k0_class(MatrixEndo::identity(ring, 1)); }

K0Class operator+(const K0Class& x, const K0Class& y) { return K0Class{x.rank + y.rank, x.witt + y.witt}; }

K0Class operator*(const K0Class& x, const K0Class& y) {
  return K0Class{x.rank * y.rank, rw_mul(x.witt, y.witt)};
}

K0Class int_scalar(std::int64_t m, const K0Class& x) { return K0Class{m * x.rank, int_scalar(m, x.witt)}; }

K0Class end0_projection(const K0Class& x) { return K0Class{0, x.witt}; }

bool k0_eq(const K0Class& x, const K0Class& y) { return x.rank == y.rank && rw_eq(x.witt, y.witt); }

}  // namespace wittkit
