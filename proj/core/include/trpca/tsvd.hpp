#pragma once

#include <cstddef>
#include <vector>

#include "trpca/tensor.hpp"

namespace trpca {

/// Default relative threshold for numerical tubal / average rank.
inline constexpr double kRankTol = 1e-10;

enum class TSvdKind { Full, Skinny };

/// a = u * s * ctranspose(v), with u and v orthogonal and s f-diagonal.
struct TSvdFactors {
    Tensor3 u;
    Tensor3 s;
    Tensor3 v;
    TSvdKind kind = TSvdKind::Full;

    /// Largest relative imaginary residual dropped while transforming
    /// u, s and v back from the Fourier domain.
    double imag_residual = 0.0;
    /// Number of matrix SVDs actually performed (n3/2 + 1).
    std::size_t slice_svds = 0;
};

/// Full t-SVD: u is n1 x n1 x n3, s is n1 x n2 x n3, v is n2 x n2 x n3.
///
/// Only Fourier slices 0..n3/2 are decomposed; the remaining slices reuse the
/// conjugated factors of their partner slice. Decomposing every slice
/// independently would break the conjugate symmetry of the factors (singular
/// vectors are only unique up to phase), and u, v would not come out real.
TSvdFactors tsvd(const Tensor3& a);

/// t-SVD truncated to r = tubal_rank(a, rank_tol) lateral slices.
TSvdFactors skinny_tsvd(const Tensor3& a, double rank_tol = kRankTol);

/// Diagonal of s(:, :, 0), length min(n1, n2), nonincreasing.
std::vector<double> singular_values(const Tensor3& a);

/// Number of singular values above rank_tol times the largest one.
std::size_t tubal_rank(const Tensor3& a, double rank_tol = kRankTol);

/// (1/n3) * sum over Fourier slices of the matrix rank, where a Fourier
/// singular value counts when it exceeds rank_tol times the largest Fourier
/// singular value of the tensor.
double average_rank(const Tensor3& a, double rank_tol = kRankTol);

/// Best approximation of a with tubal rank at most k.
Tensor3 best_rank_k(const Tensor3& a, std::size_t k);

/// Reconstruct u * s * ctranspose(v).
Tensor3 reconstruct(const TSvdFactors& f);

}  // namespace trpca
