#include "trpca/fourier.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace trpca {

namespace {

using cd = std::complex<double>;

}  // namespace

FourierTensor3 dft3(const Tensor3& a) {
    const auto [n1, n2, n3] = a.shape();
    FourierTensor3 out(n1, n2, n3);
    if (a.empty()) return out;
    if (n3 == 1) {
        for (std::size_t p = 0; p < a.size(); ++p) out.data()[p] = a.data()[p];
        return out;
    }

    const std::size_t stride = n1 * n2;
    Eigen::FFT<double> fft;
    std::vector<double> tube(n3);
    std::vector<cd> spectrum(n3);
    const auto src = a.data();
    auto dst = out.data();
    for (std::size_t t = 0; t < stride; ++t) {
        for (std::size_t k = 0; k < n3; ++k) tube[k] = src[k * stride + t];
        fft.fwd(spectrum, tube);
        for (std::size_t k = 0; k < n3; ++k) dst[k * stride + t] = spectrum[k];
    }
    return out;
}

InverseDft idft3_with_residual(const FourierTensor3& abar) {
    const auto [n1, n2, n3] = abar.shape();
    InverseDft result{Tensor3(n1, n2, n3), 0.0};
    if (abar.empty()) return result;

    const std::size_t stride = n1 * n2;
    Eigen::FFT<double> fft;
    std::vector<cd> tube(n3);
    std::vector<cd> signal(n3);
    const auto src = abar.data();
    auto dst = result.value.data();
    double imag_sq = 0.0;
    double total_sq = 0.0;
    for (std::size_t t = 0; t < stride; ++t) {
        for (std::size_t k = 0; k < n3; ++k) tube[k] = src[k * stride + t];
        if (n3 == 1) {
            signal[0] = tube[0];
        } else {
            fft.inv(signal, tube);
        }
        for (std::size_t k = 0; k < n3; ++k) {
            dst[k * stride + t] = signal[k].real();
            imag_sq += signal[k].imag() * signal[k].imag();
            total_sq += std::norm(signal[k]);
        }
    }
    result.imag_residual = total_sq > 0.0 ? std::sqrt(imag_sq / total_sq) : 0.0;
    if (result.imag_residual > kImagResidualTol) {
        throw SymmetryViolation("imaginary residual " + std::to_string(result.imag_residual) +
                                " exceeds tolerance; Fourier tensor is not conjugate symmetric");
    }
    return result;
}

Tensor3 idft3(const FourierTensor3& abar) { return idft3_with_residual(abar).value; }

double conjugate_symmetry_defect(const FourierTensor3& abar) {
    const double scale = fro_norm(abar);
    if (scale == 0.0) return 0.0;
    const std::size_t n3 = abar.n3();
    double worst = 0.0;
    for (std::size_t j = 0; j < n3; ++j) {
        const std::size_t partner = conjugate_partner(j, n3);
        const double defect = (abar.slice(j) - abar.slice(partner).conjugate()).norm();
        worst = std::max(worst, defect);
    }
    return worst / scale;
}

void mirror_conjugate_slices(FourierTensor3& abar) {
    const std::size_t n3 = abar.n3();
    for (std::size_t j = independent_slices(n3); j < n3; ++j) {
        abar.slice(j) = abar.slice(n3 - j).conjugate();
    }
}

Eigen::MatrixXd bcirc(const Tensor3& a) {
    const auto [n1, n2, n3] = a.shape();
    const auto r = static_cast<Eigen::Index>(n1);
    const auto c = static_cast<Eigen::Index>(n2);
    Eigen::MatrixXd m(r * static_cast<Eigen::Index>(n3), c * static_cast<Eigen::Index>(n3));
    for (std::size_t p = 0; p < n3; ++p) {
        for (std::size_t q = 0; q < n3; ++q) {
            const std::size_t k = (p + n3 - q) % n3;
            m.block(static_cast<Eigen::Index>(p) * r, static_cast<Eigen::Index>(q) * c, r, c) =
                a.slice(k);
        }
    }
    return m;
}

Eigen::MatrixXcd bdiag(const FourierTensor3& abar) {
    const auto [n1, n2, n3] = abar.shape();
    const auto r = static_cast<Eigen::Index>(n1);
    const auto c = static_cast<Eigen::Index>(n2);
    Eigen::MatrixXcd m =
        Eigen::MatrixXcd::Zero(r * static_cast<Eigen::Index>(n3), c * static_cast<Eigen::Index>(n3));
    for (std::size_t k = 0; k < n3; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        m.block(kk * r, kk * c, r, c) = abar.slice(k);
    }
    return m;
}

Eigen::MatrixXd unfold(const Tensor3& a) {
    const auto [n1, n2, n3] = a.shape();
    const auto r = static_cast<Eigen::Index>(n1);
    Eigen::MatrixXd m(r * static_cast<Eigen::Index>(n3), static_cast<Eigen::Index>(n2));
    for (std::size_t k = 0; k < n3; ++k) {
        m.middleRows(static_cast<Eigen::Index>(k) * r, r) = a.slice(k);
    }
    return m;
}

Tensor3 fold(const Eigen::MatrixXd& m, std::size_t n3) {
    const auto rows = static_cast<std::size_t>(m.rows());
    if (n3 == 0 || rows % n3 != 0) {
        throw ShapeMismatch("fold: " + std::to_string(rows) + " rows not divisible by n3=" +
                            std::to_string(n3));
    }
    const std::size_t n1 = rows / n3;
    Tensor3 a(n1, static_cast<std::size_t>(m.cols()), n3);
    const auto r = static_cast<Eigen::Index>(n1);
    for (std::size_t k = 0; k < n3; ++k) {
        a.slice(k) = m.middleRows(static_cast<Eigen::Index>(k) * r, r);
    }
    return a;
}

Eigen::MatrixXcd dft_matrix(std::size_t n) {
    const auto nn = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd f(nn, nn);
    for (Eigen::Index j = 0; j < nn; ++j) {
        for (Eigen::Index k = 0; k < nn; ++k) {
            // Reduce jk mod n first so the angle stays small and exact.
            const double angle = -2.0 * std::numbers::pi *
                                 static_cast<double>((j * k) % nn) / static_cast<double>(n);
            f(j, k) = std::polar(1.0, angle);
        }
    }
    return f;
}

}  // namespace trpca
