#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "trpca/error.hpp"

namespace trpca {

struct Shape {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;

    std::size_t size() const { return n1 * n2 * n3; }
    friend bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(const Shape& s);

/// Dense 3-way array stored frontal-slice-slowest, row-major inside each
/// slice: entry (i, j, k) lives at k*n1*n2 + i*n2 + j. Frontal slices are
/// therefore contiguous and can be viewed as Eigen row-major matrices.
template <typename T>
class BasicTensor3 {
public:
    using value_type = T;
    using SliceMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using SliceMap = Eigen::Map<SliceMatrix>;
    using ConstSliceMap = Eigen::Map<const SliceMatrix>;

    BasicTensor3() = default;

    BasicTensor3(std::size_t n1, std::size_t n2, std::size_t n3)
        : shape_{n1, n2, n3}, data_(n1 * n2 * n3, T{}) {}

    explicit BasicTensor3(Shape shape) : BasicTensor3(shape.n1, shape.n2, shape.n3) {}

    BasicTensor3(std::size_t n1, std::size_t n2, std::size_t n3, std::vector<T> data)
        : shape_{n1, n2, n3}, data_(std::move(data)) {
        if (data_.size() != shape_.size()) {
            throw ShapeMismatch("data length " + std::to_string(data_.size()) +
                                " does not match " + to_string(shape_));
        }
    }

    const Shape& shape() const { return shape_; }
    std::size_t n1() const { return shape_.n1; }
    std::size_t n2() const { return shape_.n2; }
    std::size_t n3() const { return shape_.n3; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(k * shape_.n1 + i) * shape_.n2 + j];
    }
    const T& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(k * shape_.n1 + i) * shape_.n2 + j];
    }

    std::span<T> data() { return data_; }
    std::span<const T> data() const { return data_; }
    const std::vector<T>& values() const { return data_; }

    SliceMap slice(std::size_t k) {
        return SliceMap(data_.data() + k * slice_size(), rows(), cols());
    }
    ConstSliceMap slice(std::size_t k) const {
        return ConstSliceMap(data_.data() + k * slice_size(), rows(), cols());
    }

    /// Whole tensor as a flat Eigen array for elementwise arithmetic.
    Eigen::Map<Eigen::Array<T, Eigen::Dynamic, 1>> array() {
        return {data_.data(), static_cast<Eigen::Index>(data_.size())};
    }
    Eigen::Map<const Eigen::Array<T, Eigen::Dynamic, 1>> array() const {
        return {data_.data(), static_cast<Eigen::Index>(data_.size())};
    }

    BasicTensor3& operator+=(const BasicTensor3& other) {
        require_same_shape(other, "+=");
        array() += other.array();
        return *this;
    }
    BasicTensor3& operator-=(const BasicTensor3& other) {
        require_same_shape(other, "-=");
        array() -= other.array();
        return *this;
    }
    BasicTensor3& operator*=(T scale) {
        array() *= scale;
        return *this;
    }

    friend BasicTensor3 operator+(BasicTensor3 a, const BasicTensor3& b) { return a += b; }
    friend BasicTensor3 operator-(BasicTensor3 a, const BasicTensor3& b) { return a -= b; }
    friend BasicTensor3 operator*(BasicTensor3 a, T s) { return a *= s; }
    friend BasicTensor3 operator*(T s, BasicTensor3 a) { return a *= s; }

    friend bool operator==(const BasicTensor3&, const BasicTensor3&) = default;

    void require_same_shape(const BasicTensor3& other, const char* op) const {
        if (shape_ != other.shape_) {
            throw ShapeMismatch(std::string(op) + ": " + to_string(shape_) + " vs " +
                                to_string(other.shape_));
        }
    }

private:
    Eigen::Index rows() const { return static_cast<Eigen::Index>(shape_.n1); }
    Eigen::Index cols() const { return static_cast<Eigen::Index>(shape_.n2); }
    std::size_t slice_size() const { return shape_.n1 * shape_.n2; }

    Shape shape_{};
    std::vector<T> data_;
};

using Tensor3 = BasicTensor3<double>;
/// Mode-3 DFT of a real tensor. Produced by dft3, consumed by idft3.
using FourierTensor3 = BasicTensor3<std::complex<double>>;

double inner(const Tensor3& a, const Tensor3& b);
double fro_norm(const Tensor3& a);
double l1_norm(const Tensor3& a);
double linf_norm(const Tensor3& a);
/// Number of entries that are exactly nonzero.
std::size_t l0_norm(const Tensor3& a);

double fro_norm(const FourierTensor3& a);
std::complex<double> inner(const FourierTensor3& a, const FourierTensor3& b);

bool all_finite(const Tensor3& a);

/// ||a - b||_F / ||b||_F, falling back to the absolute error when b is zero.
double relative_error(const Tensor3& a, const Tensor3& b);

}  // namespace trpca
