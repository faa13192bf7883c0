#include "slice_svd.hpp"

#include <algorithm>

#include <Eigen/SVD>

#include "trpca/fourier.hpp"

namespace trpca::detail {

namespace {

unsigned int svd_flags(SvdVectors vectors) {
    switch (vectors) {
        case SvdVectors::Thin: return Eigen::ComputeThinU | Eigen::ComputeThinV;
        case SvdVectors::Full: return Eigen::ComputeFullU | Eigen::ComputeFullV;
        case SvdVectors::None: break;
    }
    return 0;
}

template <typename Matrix>
SliceSvd decompose(const Matrix& m, SvdVectors vectors) {
    SliceSvd out;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    if (rows == 0 || cols == 0) {
        // Eigen's SVD does not accept empty inputs.
        const Eigen::Index k = vectors == SvdVectors::Full ? rows : 0;
        const Eigen::Index l = vectors == SvdVectors::Full ? cols : 0;
        out.u = Eigen::MatrixXcd::Identity(rows, k);
        out.v = Eigen::MatrixXcd::Identity(cols, l);
        return out;
    }
    Eigen::BDCSVD<Matrix> svd(m, svd_flags(vectors));
    if (svd.info() != Eigen::Success || !svd.singularValues().allFinite()) {
        throw NumericalFailure("slice SVD did not converge");
    }
    out.s = svd.singularValues();
    if (vectors != SvdVectors::None) {
        out.u = svd.matrixU().template cast<std::complex<double>>();
        out.v = svd.matrixV().template cast<std::complex<double>>();
    }
    return out;
}

}  // namespace

SliceSvd fourier_slice_svd(const FourierTensor3& abar, std::size_t j, SvdVectors vectors) {
    const auto slice = abar.slice(j);
    if (!is_self_paired(j, abar.n3())) {
        return decompose(Eigen::MatrixXcd(slice), vectors);
    }
    const double imag = slice.imag().norm();
    if (imag > kImagResidualTol * std::max(fro_norm(abar), 1e-300)) {
        throw SymmetryViolation("self-paired Fourier slice " + std::to_string(j) +
                                " has imaginary part " + std::to_string(imag));
    }
    return decompose(Eigen::MatrixXd(slice.real()), vectors);
}

std::vector<Eigen::VectorXd> fourier_singular_values(const Tensor3& a) {
    const FourierTensor3 abar = dft3(a);
    std::vector<Eigen::VectorXd> values;
    values.reserve(independent_slices(a.n3()));
    for (std::size_t j = 0; j < independent_slices(a.n3()); ++j) {
        values.push_back(fourier_slice_svd(abar, j, SvdVectors::None).s);
    }
    return values;
}

}  // namespace trpca::detail
