#include "wittkit/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wittkit::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

RingSpec spec_of(std::span<const RingElement> a, std::span<const RingElement> b) {
  if (!a.empty()) return a.front().spec();
  if (!b.empty()) return b.front().spec();
  return RingSpec::integers();
}

RingElement mullow_coeff(std::span<const RingElement> a, std::span<const RingElement> b,
                         std::size_t k, const RingSpec& spec) {
  RingElement acc = spec.zero();
  const std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
  const std::size_t hi = std::min(k, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (a[i].is_zero() || b[k - i].is_zero()) continue;
    acc += a[i] * b[k - i];
  }
  return acc;
}

RingElement matmul_entry(std::span<const RingElement> a, std::span<const RingElement> b,
                         std::size_t n, std::size_t i, std::size_t j, const RingSpec& spec) {
  RingElement acc = spec.zero();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[i * n + k].is_zero() || b[k * n + j].is_zero()) continue;
    acc += a[i * n + k] * b[k * n + j];
  }
  return acc;
}

}  // namespace

namespace serial {

std::vector<RingElement> mullow(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t len) {
  const RingSpec spec = spec_of(a, b);
  std::vector<RingElement> out(len, spec.zero());
  if (a.empty() || b.empty()) return out;
  for (std::size_t k = 0; k < len; ++k) out[k] = mullow_coeff(a, b, k, spec);
  return out;
}

std::vector<RingElement> matmul(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t n) {
  const RingSpec spec = spec_of(a, b);
  std::vector<RingElement> out(n * n, spec.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = matmul_entry(a, b, n, i, j, spec);
  return out;
}

std::vector<RingElement> kron(std::span<const RingElement> a, std::size_t r,
                              std::span<const RingElement> b, std::size_t s) {
  const RingSpec spec = spec_of(a, b);
  const std::size_t n = r * s;
  std::vector<RingElement> out(n * n, spec.zero());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (a[i * r + j].is_zero()) continue;
      for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = 0; l < s; ++l)
          out[(i * s + k) * n + (j * s + l)] = a[i * r + j] * b[k * s + l];
    }
  return out;
}

}  // namespace serial

namespace omp {

std::vector<RingElement> mullow(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t len) {
  const RingSpec spec = spec_of(a, b);
  std::vector<RingElement> out(len, spec.zero());
  if (a.empty() || b.empty()) return out;
  const long n = static_cast<long>(len);
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < n; ++k) out[k] = mullow_coeff(a, b, static_cast<std::size_t>(k), spec);
  return out;
}

std::vector<RingElement> matmul(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t n) {
  const RingSpec spec = spec_of(a, b);
  std::vector<RingElement> out(n * n, spec.zero());
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = matmul_entry(a, b, n, static_cast<std::size_t>(i), j, spec);
  return out;
}

std::vector<RingElement> kron(std::span<const RingElement> a, std::size_t r,
                              std::span<const RingElement> b, std::size_t s) {
  const RingSpec spec = spec_of(a, b);
  const std::size_t n = r * s;
  std::vector<RingElement> out(n * n, spec.zero());
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long row = 0; row < rows; ++row) {
    const std::size_t i = static_cast<std::size_t>(row) / s, k = static_cast<std::size_t>(row) % s;
    for (std::size_t j = 0; j < r; ++j) {
      if (a[i * r + j].is_zero()) continue;
      for (std::size_t l = 0; l < s; ++l) out[row * n + (j * s + l)] = a[i * r + j] * b[k * s + l];
    }
  }
  return out;
}

}  // namespace omp

std::vector<RingElement> mullow(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t len) {
  if (max_threads() > 1 && len * std::min(a.size(), b.size()) >= kParallelThreshold)
    return omp::mullow(a, b, len);
  return serial::mullow(a, b, len);
}

std::vector<RingElement> matmul(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t n) {
  if (max_threads() > 1 && n * n * n >= kParallelThreshold) return omp::matmul(a, b, n);
  return serial::matmul(a, b, n);
}

std::vector<RingElement> kron(std::span<const RingElement> a, std::size_t r,
                              std::span<const RingElement> b, std::size_t s) {
  if (max_threads() > 1 && r * r * s * s >= kParallelThreshold) return omp::kron(a, r, b, s);
  return serial::kron(a, r, b, s);
}

}  // namespace wittkit::kernels
