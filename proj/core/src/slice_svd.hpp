#pragma once

// Per-Fourier-slice SVD shared by t-SVD, t-SVT and the norms.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "trpca/tensor.hpp"

namespace trpca::detail {

enum class SvdVectors { None, Thin, Full };

struct SliceSvd {
    Eigen::MatrixXcd u;
    Eigen::VectorXd s;  // descending
    Eigen::MatrixXcd v;
};

/// SVD of Fourier slice j of abar. Self-paired slices (j == 0, and j == n3/2
/// for even n3) are real up to rounding; they are decomposed as real matrices
/// so that the resulting singular vectors are real as well.
SliceSvd fourier_slice_svd(const FourierTensor3& abar, std::size_t j, SvdVectors vectors);

/// Singular values of the independent Fourier slices 0..n3/2 of dft3(a).
std::vector<Eigen::VectorXd> fourier_singular_values(const Tensor3& a);

/// Number of Fourier slices represented by independent slice j
/// (1 for self-paired slices, 2 otherwise).
inline double slice_multiplicity(std::size_t j, std::size_t n3) {
    return (j == 0 || 2 * j == n3) ? 1.0 : 2.0;
}

}  // namespace trpca::detail
