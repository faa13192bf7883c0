#pragma once

#include <cstddef>

#include "trpca/tensor.hpp"

namespace trpca {

/// Default absolute tolerance for the orthogonality / f-diagonality predicates.
inline constexpr double kPredicateTol = 1e-8;

/// t-product of an n1 x n2 x n3 tensor with an n2 x l x n3 tensor.
///
/// Computed slice-wise in the Fourier domain: only slices 0..n3/2 are
/// multiplied, the rest follow by conjugate symmetry. n3 == 1 is a plain
/// matrix product with no transforms.
Tensor3 tprod(const Tensor3& a, const Tensor3& b);

/// Transpose every frontal slice and reverse the order of slices 1..n3-1.
Tensor3 ctranspose(const Tensor3& a);

/// n x n x n3 tensor whose first frontal slice is the identity, others zero.
Tensor3 identity_tensor(std::size_t n, std::size_t n3);

/// q* * q == I and q * q* == I, each within tol * sqrt(n) in Frobenius norm.
bool is_orthogonal(const Tensor3& q, double tol = kPredicateTol);

/// Every frontal slice diagonal up to tol in max off-diagonal magnitude.
bool is_fdiagonal(const Tensor3& s, double tol = kPredicateTol);

/// Lateral slices [first, first + count) of a, i.e. a(:, first:first+count, :).
Tensor3 lateral_slices(const Tensor3& a, std::size_t first, std::size_t count);

}  // namespace trpca
