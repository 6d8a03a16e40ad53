#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittkit/series.hpp"

namespace wittkit {

/*
 * A square matrix over a RingSpec, modelling an endomorphism (P, phi) of a
 * free module P = R^r. Size 0 is allowed and models the zero object.
 * Entries are stored row-major.
 */
class MatrixEndo {
 public:
  explicit MatrixEndo(RingSpec ring, std::size_t size = 0);
  MatrixEndo(RingSpec ring, std::size_t size, std::vector<RingElement> entries);
  static MatrixEndo identity(const RingSpec& ring, std::size_t size);
  static MatrixEndo from_rows(const RingSpec& ring, const std::vector<std::vector<long>>& rows);

  const RingSpec& ring() const { return ring_; }
  std::size_t size() const { return size_; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return e_[i * size_ + j]; }
  RingElement& operator()(std::size_t i, std::size_t j) { return e_[i * size_ + j]; }
  const std::vector<RingElement>& entries() const { return e_; }

  bool is_zero() const;

  friend MatrixEndo operator*(const MatrixEndo& a, const MatrixEndo& b);
  MatrixEndo pow(std::uint64_t e) const;

  friend bool operator==(const MatrixEndo& a, const MatrixEndo& b) {
    return a.ring_ == b.ring_ && a.size_ == b.size_ && a.e_ == b.e_;
  }

  /// `[[1,1],[0,2]]`; the empty matrix prints as `[]`.
  std::string to_string() const;

 private:
  RingSpec ring_;
  std::size_t size_;
  std::vector<RingElement> e_;
};

/// det(1 - t phi) by Berkowitz's division-free algorithm.
UnitPolynomial char_series(const MatrixEndo& phi);

/// A d x d matrix with char_series equal to p (d = deg p).
MatrixEndo companion_of_polynomial(const UnitPolynomial& p);

}  // namespace wittkit
