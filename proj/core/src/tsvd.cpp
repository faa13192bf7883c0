#include "trpca/tsvd.hpp"

#include <algorithm>

#include "slice_svd.hpp"
#include "trpca/fourier.hpp"
#include "trpca/talgebra.hpp"

namespace trpca {

namespace {

using detail::SvdVectors;

TSvdFactors factor(const Tensor3& a, SvdVectors vectors) {
    const auto [n1, n2, n3] = a.shape();
    const std::size_t n = std::min(n1, n2);
    const bool full = vectors == SvdVectors::Full;
    const std::size_t ucols = full ? n1 : n;
    const std::size_t vcols = full ? n2 : n;

    const FourierTensor3 abar = dft3(a);
    FourierTensor3 ubar(n1, ucols, n3);
    FourierTensor3 sbar(ucols, vcols, n3);
    FourierTensor3 vbar(n2, vcols, n3);

    TSvdFactors out;
    out.kind = full ? TSvdKind::Full : TSvdKind::Skinny;
    for (std::size_t j = 0; j < independent_slices(n3); ++j) {
        const detail::SliceSvd svd = detail::fourier_slice_svd(abar, j, vectors);
        ++out.slice_svds;
        ubar.slice(j) = svd.u;
        vbar.slice(j) = svd.v;
        auto sj = sbar.slice(j);
        for (Eigen::Index i = 0; i < svd.s.size(); ++i) sj(i, i) = svd.s(i);
    }
    mirror_conjugate_slices(ubar);
    mirror_conjugate_slices(sbar);
    mirror_conjugate_slices(vbar);

    auto u = idft3_with_residual(ubar);
    auto s = idft3_with_residual(sbar);
    auto v = idft3_with_residual(vbar);
    out.imag_residual = std::max({u.imag_residual, s.imag_residual, v.imag_residual});
    out.u = std::move(u.value);
    out.s = std::move(s.value);
    out.v = std::move(v.value);
    return out;
}

std::size_t count_above(const std::vector<double>& values, double rank_tol) {
    if (values.empty() || values.front() <= 0.0) return 0;
    const double cutoff = rank_tol * values.front();
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [&](double x) { return x > cutoff; }));
}

void require_rank_tol(double rank_tol) {
    if (!(rank_tol > 0.0)) throw InvalidArgument("rank_tol must be positive");
}

}  // namespace

TSvdFactors tsvd(const Tensor3& a) { return factor(a, SvdVectors::Full); }

TSvdFactors skinny_tsvd(const Tensor3& a, double rank_tol) {
    require_rank_tol(rank_tol);
    TSvdFactors thin = factor(a, SvdVectors::Thin);

    std::vector<double> diag;
    for (std::size_t i = 0; i < std::min(thin.s.n1(), thin.s.n2()); ++i) {
        diag.push_back(thin.s(i, i, 0));
    }
    const std::size_t r = count_above(diag, rank_tol);

    TSvdFactors out;
    out.kind = TSvdKind::Skinny;
    out.imag_residual = thin.imag_residual;
    out.slice_svds = thin.slice_svds;
    out.u = lateral_slices(thin.u, 0, r);
    out.v = lateral_slices(thin.v, 0, r);
    out.s = Tensor3(r, r, a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) {
        out.s.slice(k) = thin.s.slice(k).topLeftCorner(static_cast<Eigen::Index>(r),
                                                       static_cast<Eigen::Index>(r));
    }
    return out;
}

std::vector<double> singular_values(const Tensor3& a) {
    const std::size_t n3 = a.n3();
    const std::size_t n = std::min(a.n1(), a.n2());
    std::vector<double> values(n, 0.0);
    const auto fourier = detail::fourier_singular_values(a);
    for (std::size_t j = 0; j < fourier.size(); ++j) {
        const double weight = detail::slice_multiplicity(j, n3);
        for (std::size_t i = 0; i < n; ++i) {
            values[i] += weight * fourier[j](static_cast<Eigen::Index>(i));
        }
    }
    for (double& x : values) x /= static_cast<double>(n3);
    return values;
}

std::size_t tubal_rank(const Tensor3& a, double rank_tol) {
    require_rank_tol(rank_tol);
    return count_above(singular_values(a), rank_tol);
}

double average_rank(const Tensor3& a, double rank_tol) {
    require_rank_tol(rank_tol);
    const auto fourier = detail::fourier_singular_values(a);
    double largest = 0.0;
    for (const auto& s : fourier) {
        if (s.size() > 0) largest = std::max(largest, s(0));
    }
    if (largest <= 0.0) return 0.0;
    const double cutoff = rank_tol * largest;
    double total = 0.0;
    for (std::size_t j = 0; j < fourier.size(); ++j) {
        const auto rank = (fourier[j].array() > cutoff).count();
        total += detail::slice_multiplicity(j, a.n3()) * static_cast<double>(rank);
    }
    return total / static_cast<double>(a.n3());
}

Tensor3 best_rank_k(const Tensor3& a, std::size_t k) {
    const std::size_t n = std::min(a.n1(), a.n2());
    if (k > n) {
        throw RankOutOfRange("best_rank_k: k=" + std::to_string(k) + " exceeds min(n1,n2)=" +
                             std::to_string(n));
    }
    const std::size_t n3 = a.n3();
    const FourierTensor3 abar = dft3(a);
    FourierTensor3 out(a.n1(), a.n2(), n3);
    const auto kk = static_cast<Eigen::Index>(k);
    for (std::size_t j = 0; j < independent_slices(n3); ++j) {
        if (k == 0) break;
        const detail::SliceSvd svd = detail::fourier_slice_svd(abar, j, SvdVectors::Thin);
        out.slice(j).noalias() = svd.u.leftCols(kk) *
                                 svd.s.head(kk).cast<std::complex<double>>().asDiagonal() *
                                 svd.v.leftCols(kk).adjoint();
    }
    mirror_conjugate_slices(out);
    return idft3(out);
}

Tensor3 reconstruct(const TSvdFactors& f) {
    return tprod(f.u, tprod(f.s, ctranspose(f.v)));
}

}  // namespace trpca
