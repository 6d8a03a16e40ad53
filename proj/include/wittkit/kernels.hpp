#pragma once

// Dense inner loops shared by the series and matrix code.
//
// Every kernel exists twice: `serial::` is the reference implementation the
// tests compare against, `omp::` splits the outer loop across OpenMP threads.
// The unqualified entry points pick one by problem size.

#include <cstddef>
#include <span>
#include <vector>

#include "wittkit/ring.hpp"

namespace wittkit::kernels {

/// Work (in ring multiplications) below which the dispatchers stay serial.
inline constexpr std::size_t kParallelThreshold = 1 << 14;

int max_threads();

namespace serial {

/// Truncated product: out[k] = sum_{i+j=k} a[i]*b[j] for k < len.
std::vector<RingElement> mullow(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t len);
/// Row-major n x n product.
std::vector<RingElement> matmul(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t n);
/// Kronecker product of an r x r and an s x s row-major matrix.
std::vector<RingElement> kron(std::span<const RingElement> a, std::size_t r,
                              std::span<const RingElement> b, std::size_t s);

}  // namespace serial

namespace omp {

std::vector<RingElement> mullow(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t len);
std::vector<RingElement> matmul(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t n);
std::vector<RingElement> kron(std::span<const RingElement> a, std::size_t r,
                              std::span<const RingElement> b, std::size_t s);

}  // namespace omp

std::vector<RingElement> mullow(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t len);
std::vector<RingElement> matmul(std::span<const RingElement> a, std::span<const RingElement> b,
                                std::size_t n);
std::vector<RingElement> kron(std::span<const RingElement> a, std::size_t r,
                              std::span<const RingElement> b, std::size_t s);

}  // namespace wittkit::kernels
