#include "trpca/norms.hpp"

#include <algorithm>
#include <numeric>

#include "slice_svd.hpp"
#include "trpca/talgebra.hpp"

namespace trpca {

double spectral_norm(const Tensor3& a) {
    double largest = 0.0;
    for (const auto& s : detail::fourier_singular_values(a)) {
        if (s.size() > 0) largest = std::max(largest, s(0));
    }
    return largest;
}

double tnn(const Tensor3& a) {
    const auto values = singular_values(a);
    return std::accumulate(values.begin(), values.end(), 0.0);
}

Tensor3 column_basis(std::size_t n, std::size_t n3, std::size_t i) {
    Tensor3 e(n, 1, n3);
    e(i, 0, 0) = 1.0;
    return e;
}

IncoherenceReport incoherence(const Tensor3& a, double rank_tol) {
    if (fro_norm(a) == 0.0) throw ZeroTensor("incoherence of the zero tensor is undefined");
    const TSvdFactors f = skinny_tsvd(a, rank_tol);
    const auto [n1, n2, n3] = a.shape();

    IncoherenceReport report;
    report.r = f.u.n2();
    const double r = static_cast<double>(report.r);
    const Tensor3 ut = ctranspose(f.u);
    const Tensor3 vt = ctranspose(f.v);

    double max_u = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
        const double norm = fro_norm(tprod(ut, column_basis(n1, n3, i)));
        max_u = std::max(max_u, norm * norm);
    }
    double max_v = 0.0;
    for (std::size_t i = 0; i < n2; ++i) {
        const double norm = fro_norm(tprod(vt, column_basis(n2, n3, i)));
        max_v = std::max(max_v, norm * norm);
    }
    const double joint = linf_norm(tprod(f.u, vt));

    const double d1 = static_cast<double>(n1);
    const double d2 = static_cast<double>(n2);
    const double d3 = static_cast<double>(n3);
    report.mu_u = d1 * d3 / r * max_u;
    report.mu_v = d2 * d3 / r * max_v;
    report.mu_joint = d1 * d2 * d3 * d3 / r * joint * joint;
    return report;
}

bool check_subgradient(const Tensor3& a, const Tensor3& w, double tol) {
    a.require_same_shape(w, "check_subgradient");
    const TSvdFactors f = skinny_tsvd(a);
    if (f.u.n2() > 0) {
        if (fro_norm(tprod(ctranspose(f.u), w)) > tol) return false;
        if (fro_norm(tprod(w, f.v)) > tol) return false;
    }
    return spectral_norm(w) <= 1.0 + tol;
}

}  // namespace trpca
