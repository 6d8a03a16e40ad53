#include "wittkit/matrix.hpp"

#include <algorithm>

#include "wittkit/kernels.hpp"

namespace wittkit {

MatrixEndo::MatrixEndo(RingSpec ring, std::size_t size)
    : ring_(ring), size_(size), e_(size * size, ring.zero()) {}

MatrixEndo::MatrixEndo(RingSpec ring, std::size_t size, std::vector<RingElement> entries)
    : ring_(ring), size_(size), e_(std::move(entries)) {
  if (e_.size() != size * size)
    throw Error("matrix of size " + std::to_string(size) + " needs " + std::to_string(size * size) +
                " entries, got " + std::to_string(e_.size()));
  for (const auto& x : e_)
    if (!(x.spec() == ring_))
      throw SpecMismatch("ring mismatch: " + ring_.to_string() + " vs " + x.spec().to_string());
}

MatrixEndo MatrixEndo::identity(const RingSpec& ring, std::size_t size) {
  MatrixEndo m(ring, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = ring.one();
  return m;
}

MatrixEndo MatrixEndo::from_rows(const RingSpec& ring, const std::vector<std::vector<long>>& rows) {
  MatrixEndo m(ring, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error("matrix rows must have length " + std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = ring.from_int(rows[i][j]);
  }
  return m;
}

bool MatrixEndo::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const RingElement& x) { return x.is_zero(); });
}

MatrixEndo operator*(const MatrixEndo& a, const MatrixEndo& b) {
  if (!(a.ring_ == b.ring_))
    throw SpecMismatch("ring mismatch: " + a.ring_.to_string() + " vs " + b.ring_.to_string());
  if (a.size_ != b.size_) throw Error("matrix size mismatch");
  return MatrixEndo(a.ring_, a.size_, kernels::matmul(a.e_, b.e_, a.size_));
}

MatrixEndo MatrixEndo::pow(std::uint64_t e) const {
  MatrixEndo result = identity(ring_, size_), base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

std::string MatrixEndo::to_string() const {
  if (size_ == 0) return "[]";
  std::string out = "[";
  for (std::size_t i = 0; i < size_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < size_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

UnitPolynomial char_series(const MatrixEndo& phi) {
  const RingSpec& ring = phi.ring();
  const std::size_t n = phi.size();
  // p holds the coefficients of det(lambda - M_k), highest degree first, for
  // the leading k x k block M_k. Those are exactly 1, c_1, ..., c_k of det(1 - t M_k).
  std::vector<RingElement> p{ring.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t m = k - 1;  // size of the previous block
    std::vector<RingElement> toeplitz{ring.one(), -phi(m, m)};
    std::vector<RingElement> v(m);  // column above the new diagonal entry
    for (std::size_t i = 0; i < m; ++i) v[i] = phi(i, m);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      RingElement rv = ring.zero();
      for (std::size_t i = 0; i < m; ++i)
        if (!phi(m, i).is_zero() && !v[i].is_zero()) rv += phi(m, i) * v[i];
      toeplitz.push_back(-rv);
      if (j + 2 < k) {
        std::vector<RingElement> next(m, ring.zero());
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            if (!phi(r, c).is_zero() && !v[c].is_zero()) next[r] += phi(r, c) * v[c];
        v = std::move(next);
      }
    }
    std::vector<RingElement> q(k + 1, ring.zero());
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j)
        if (i - j < p.size() && !toeplitz[j].is_zero() && !p[i - j].is_zero()) q[i] += toeplitz[j] * p[i - j];
    p = std::move(q);
  }
  return UnitPolynomial(ring, std::vector<RingElement>(p.begin() + 1, p.end()));
}

MatrixEndo companion_of_polynomial(const UnitPolynomial& p) {
  const std::size_t d = p.degree();
  MatrixEndo m(p.ring(), d);
  // Subdiagonal ones, last column -c_d, ..., -c_1: det(lambda - M) = lambda^d + c_1 lambda^{d-1} + ... + c_d.
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = p.ring().one();
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -p.coeff(d - i);
  return m;
}

}  // namespace wittkit
