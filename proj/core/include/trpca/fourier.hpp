#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "trpca/tensor.hpp"

namespace trpca {

// Mode-3 DFT convention: unnormalized forward transform, 1/n3 on the inverse.
//
// A real tensor's transform is conjugate symmetric along mode 3. With 0-based
// slice indices that reads: slice 0 is real, and slice j == conj(slice n3-j)
// for j in 1..n3-1. For even n3 the slice j = n3/2 is paired with itself and
// is therefore real as well.

/// Relative tolerance for the imaginary residual that idft3 silently discards.
inline constexpr double kImagResidualTol = 1e-8;

/// Index of the conjugate partner of Fourier slice j.
inline std::size_t conjugate_partner(std::size_t j, std::size_t n3) {
    return j == 0 ? 0 : n3 - j;
}

/// Slices 0..n3/2 determine the rest by conjugate symmetry.
inline std::size_t independent_slices(std::size_t n3) { return n3 / 2 + 1; }

/// True for the slices that are their own conjugate partner.
inline bool is_self_paired(std::size_t j, std::size_t n3) {
    return conjugate_partner(j, n3) == j;
}

FourierTensor3 dft3(const Tensor3& a);

struct InverseDft {
    Tensor3 value;
    /// ||imag(ifft(abar))||_F / ||ifft(abar)||_F before truncation.
    double imag_residual = 0.0;
};

/// Inverse transform that reports the discarded imaginary residual.
/// Throws SymmetryViolation when the residual exceeds kImagResidualTol.
InverseDft idft3_with_residual(const FourierTensor3& abar);

Tensor3 idft3(const FourierTensor3& abar);

/// Largest relative deviation from conjugate symmetry, measured against
/// ||abar||_F. Zero for an exactly symmetric tensor.
double conjugate_symmetry_defect(const FourierTensor3& abar);

/// Overwrite slices n3/2+1..n3-1 with the conjugates of their partners.
void mirror_conjugate_slices(FourierTensor3& abar);

// Dense reference operators. These are O(n3^2) in memory and exist as
// oracles for the Fourier-domain fast paths.

/// (n1*n3) x (n2*n3) block circulant matrix; block (p, q) is slice (p-q) mod n3.
Eigen::MatrixXd bcirc(const Tensor3& a);

/// Block diagonal matrix with the Fourier slices on the diagonal.
Eigen::MatrixXcd bdiag(const FourierTensor3& abar);

/// Stack frontal slices vertically into an (n1*n3) x n2 matrix.
Eigen::MatrixXd unfold(const Tensor3& a);

/// Inverse of unfold. Throws ShapeMismatch when rows are not divisible by n3.
Tensor3 fold(const Eigen::MatrixXd& m, std::size_t n3);

/// The n x n DFT matrix, entries exp(-2 pi i jk / n).
Eigen::MatrixXcd dft_matrix(std::size_t n);

}  // namespace trpca
