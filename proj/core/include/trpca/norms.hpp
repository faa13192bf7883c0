#pragma once

#include <cstddef>

#include "trpca/tensor.hpp"
#include "trpca/tsvd.hpp"

namespace trpca {

/// ||bcirc(a)||, i.e. the largest singular value over all Fourier slices.
double spectral_norm(const Tensor3& a);

/// Tensor nuclear norm: sum of singular_values(a), equal to
/// (1/n3) * ||bcirc(a)||_*.
double tnn(const Tensor3& a);

/// Smallest incoherence parameters satisfied by the skinny t-SVD of a tensor.
struct IncoherenceReport {
    double mu_u = 0.0;
    double mu_v = 0.0;
    double mu_joint = 0.0;
    std::size_t r = 0;
};

/// mu_u = (n1 n3 / r) max_i ||u* * e_i||_F^2, mu_v likewise with v and n2,
/// mu_joint = (n1 n2 n3^2 / r) ||u * v*||_inf^2. e_i is the n x 1 x n3 column
/// basis tensor with a single one at (i, 0, 0). Throws ZeroTensor for a == 0.
IncoherenceReport incoherence(const Tensor3& a, double rank_tol = kRankTol);

/// Membership test for the subdifferential of the nuclear norm at a:
/// w qualifies when ||u* * w||_F <= tol, ||w * v||_F <= tol and
/// spectral_norm(w) <= 1 + tol, using the skinny factors of a. A full
/// subgradient is then u * v* + w.
bool check_subgradient(const Tensor3& a, const Tensor3& w, double tol);

/// The column basis tensor e_i of size n x 1 x n3.
Tensor3 column_basis(std::size_t n, std::size_t n3, std::size_t i);

}  // namespace trpca
