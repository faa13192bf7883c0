#include "trpca/talgebra.hpp"

#include <cmath>

#include "trpca/fourier.hpp"

namespace trpca {

Tensor3 tprod(const Tensor3& a, const Tensor3& b) {
    if (a.n2() != b.n1() || a.n3() != b.n3()) {
        throw ShapeMismatch("tprod: " + to_string(a.shape()) + " * " + to_string(b.shape()));
    }
    const std::size_t n3 = a.n3();
    if (n3 == 1) {
        Tensor3 c(a.n1(), b.n2(), 1);
        c.slice(0).noalias() = a.slice(0) * b.slice(0);
        return c;
    }

    const FourierTensor3 abar = dft3(a);
    const FourierTensor3 bbar = dft3(b);
    FourierTensor3 cbar(a.n1(), b.n2(), n3);
    for (std::size_t j = 0; j < independent_slices(n3); ++j) {
        cbar.slice(j).noalias() = abar.slice(j) * bbar.slice(j);
    }
    mirror_conjugate_slices(cbar);
    return idft3(cbar);
}

Tensor3 ctranspose(const Tensor3& a) {
    const auto [n1, n2, n3] = a.shape();
    Tensor3 out(n2, n1, n3);
    for (std::size_t k = 0; k < n3; ++k) {
        out.slice(k) = a.slice(conjugate_partner(k, n3)).transpose();
    }
    return out;
}

Tensor3 identity_tensor(std::size_t n, std::size_t n3) {
    if (n3 == 0) throw InvalidArgument("identity_tensor: n3 must be positive");
    Tensor3 eye(n, n, n3);
    for (std::size_t i = 0; i < n; ++i) eye(i, i, 0) = 1.0;
    return eye;
}

bool is_orthogonal(const Tensor3& q, double tol) {
    if (q.n1() != q.n2()) {
        throw ShapeMismatch("is_orthogonal: tensor is " + to_string(q.shape()));
    }
    const Tensor3 eye = identity_tensor(q.n1(), q.n3());
    const Tensor3 qt = ctranspose(q);
    const double bound = tol * std::sqrt(static_cast<double>(q.n1()));
    return fro_norm(tprod(qt, q) - eye) <= bound && fro_norm(tprod(q, qt) - eye) <= bound;
}

bool is_fdiagonal(const Tensor3& s, double tol) {
    for (std::size_t k = 0; k < s.n3(); ++k) {
        for (std::size_t i = 0; i < s.n1(); ++i) {
            for (std::size_t j = 0; j < s.n2(); ++j) {
                if (i != j && std::abs(s(i, j, k)) > tol) return false;
            }
        }
    }
    return true;
}

Tensor3 lateral_slices(const Tensor3& a, std::size_t first, std::size_t count) {
    if (first + count > a.n2()) {
        throw ShapeMismatch("lateral_slices: [" + std::to_string(first) + ", " +
                            std::to_string(first + count) + ") out of " + to_string(a.shape()));
    }
    Tensor3 out(a.n1(), count, a.n3());
    for (std::size_t k = 0; k < a.n3(); ++k) {
        out.slice(k) = a.slice(k).middleCols(static_cast<Eigen::Index>(first),
                                             static_cast<Eigen::Index>(count));
    }
    return out;
}

}  // namespace trpca
