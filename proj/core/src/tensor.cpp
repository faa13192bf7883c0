#include "trpca/tensor.hpp"

#include <cmath>
#include <string>

namespace trpca {

std::string to_string(const Shape& s) {
    return std::to_string(s.n1) + "x" + std::to_string(s.n2) + "x" + std::to_string(s.n3);
}

double inner(const Tensor3& a, const Tensor3& b) {
    a.require_same_shape(b, "inner");
    return (a.array() * b.array()).sum();
}

std::complex<double> inner(const FourierTensor3& a, const FourierTensor3& b) {
    a.require_same_shape(b, "inner");
    return (a.array().conjugate() * b.array()).sum();
}

double fro_norm(const Tensor3& a) { return a.array().matrix().norm(); }

double fro_norm(const FourierTensor3& a) { return a.array().matrix().norm(); }

double l1_norm(const Tensor3& a) { return a.array().abs().sum(); }

double linf_norm(const Tensor3& a) {
    return a.empty() ? 0.0 : a.array().abs().maxCoeff();
}

std::size_t l0_norm(const Tensor3& a) {
    return static_cast<std::size_t>((a.array() != 0.0).count());
}

bool all_finite(const Tensor3& a) { return a.array().isFinite().all(); }

double relative_error(const Tensor3& a, const Tensor3& b) {
    a.require_same_shape(b, "relative_error");
    const double diff = (a.array() - b.array()).matrix().norm();
    const double ref = fro_norm(b);
    return ref > 0.0 ? diff / ref : diff;
}

}  // namespace trpca
