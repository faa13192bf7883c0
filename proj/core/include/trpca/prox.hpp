#pragma once

#include <cstddef>

#include "trpca/tensor.hpp"

namespace trpca {

struct TsvtResult {
    Tensor3 value;
    /// Relative imaginary residual discarded by the inverse transform.
    double imag_residual = 0.0;
    std::size_t slice_svds = 0;
};

/// Tensor singular value thresholding, the proximal operator of tau * tnn.
///
/// Soft-thresholds the singular values of the Fourier slices (not the
/// singular values of s(:, :, 0)), one economy SVD per independent slice.
TsvtResult tsvt_detailed(const Tensor3& y, double tau);

Tensor3 tsvt(const Tensor3& y, double tau);

/// Elementwise sign(x) * max(|x| - kappa, 0).
Tensor3 soft_threshold(const Tensor3& x, double kappa);

}  // namespace trpca
