#include "trpca/prox.hpp"

#include "slice_svd.hpp"
#include "trpca/fourier.hpp"

namespace trpca {

TsvtResult tsvt_detailed(const Tensor3& y, double tau) {
    if (!(tau >= 0.0)) throw InvalidArgument("tsvt: tau must be nonnegative");
    const std::size_t n3 = y.n3();
    const FourierTensor3 ybar = dft3(y);
    FourierTensor3 wbar(y.n1(), y.n2(), n3);

    TsvtResult result;
    for (std::size_t j = 0; j < independent_slices(n3); ++j) {
        const detail::SliceSvd svd =
            detail::fourier_slice_svd(ybar, j, detail::SvdVectors::Thin);
        ++result.slice_svds;
        const Eigen::Index kept = (svd.s.array() > tau).count();
        if (kept == 0) continue;
        const Eigen::VectorXcd shrunk =
            (svd.s.head(kept).array() - tau).matrix().cast<std::complex<double>>();
        wbar.slice(j).noalias() =
            svd.u.leftCols(kept) * shrunk.asDiagonal() * svd.v.leftCols(kept).adjoint();
    }
    mirror_conjugate_slices(wbar);
    auto inverse = idft3_with_residual(wbar);
    result.value = std::move(inverse.value);
    result.imag_residual = inverse.imag_residual;
    return result;
}

Tensor3 tsvt(const Tensor3& y, double tau) { return tsvt_detailed(y, tau).value; }

Tensor3 soft_threshold(const Tensor3& x, double kappa) {
    if (!(kappa >= 0.0)) throw InvalidArgument("soft_threshold: kappa must be nonnegative");
    Tensor3 out(x.shape());
    out.array() = x.array().sign() * (x.array().abs() - kappa).max(0.0);
    return out;
}

}  // namespace trpca
