#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "wittkit/matrix.hpp"
#include "wittkit/rational_witt.hpp"

namespace wittkit {

/// F_l(P, phi) = (P, phi^l).
MatrixEndo endo_frobenius(std::size_t l, const MatrixEndo& phi);

/*
 * V_l(P, phi): the lr x lr block matrix with identity blocks on the block
 * subdiagonal and phi in the top-right corner. Its characteristic series is
 * det(1 - t^l phi), the Witt Verschiebung of det(1 - t phi).
 */
MatrixEndo endo_verschiebung(std::size_t l, const MatrixEndo& phi);

/// Kronecker product, size r*s.
MatrixEndo endo_tensor(const MatrixEndo& phi, const MatrixEndo& psi);
/// Block diagonal, size r+s.
MatrixEndo endo_direct_sum(const MatrixEndo& phi, const MatrixEndo& psi);

/// Least n <= cutoff with phi^n = 0, or nullopt.
std::optional<std::size_t> nilpotency_index(const MatrixEndo& phi, std::size_t cutoff);
/// Same, with the default cutoff: the size over domains, 4 r ceil(log2 m) over Z/m.
std::optional<std::size_t> nilpotency_index(const MatrixEndo& phi);
std::size_t default_nilpotency_cutoff(const MatrixEndo& phi);

/*
 * A class in K_0(End(R)) = Z + W_0(R): the rank of the underlying module and
 * the characteristic series. The End_0 projection (P, phi) - (P, 0) keeps
 * only the Witt part.
 */
struct K0Class {
  std::int64_t rank;
  RationalWitt witt;

  std::string to_string() const;
};

K0Class k0_class(const MatrixEndo& phi);
K0Class k0_unit(const RingSpec& ring);

K0Class operator+(const K0Class& x, const K0Class& y);
K0Class operator*(const K0Class& x, const K0Class& y);
K0Class int_scalar(std::int64_t m, const K0Class& x);
K0Class end0_projection(const K0Class& x);

/// Same rank and rw_eq Witt parts.
bool k0_eq(const K0Class& x, const K0Class& y);

}  // namespace wittkit
