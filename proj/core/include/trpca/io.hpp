#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trpca/synth.hpp"
#include "trpca/tensor.hpp"

namespace trpca {

// T3F1 tensor files: the 4 magic bytes "T3F1", then n1, n2, n3 as
// little-endian uint32, then n1*n2*n3 little-endian IEEE-754 doubles in the
// in-memory layout (frontal slice slowest, row-major inside a slice).

std::vector<std::uint8_t> encode_t3f(const Tensor3& a);
/// Throws BadMagic, Truncated or DimensionOverflow. Trailing bytes are
/// rejected as well (Truncated would be misleading, so they raise
/// MalformedHeader).
Tensor3 decode_t3f(std::span<const std::uint8_t> bytes);

void write_tensor(const std::filesystem::path& path, const Tensor3& a);
Tensor3 read_tensor(const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Binary PPM (P6, maxval 255) to an n1 x n2 x 3 tensor: row i, column j,
/// channel c maps to entry (i, j, c) scaled to [0, 1].
Tensor3 image_to_tensor(std::span<const std::uint8_t> ppm);

/// Inverse of image_to_tensor: clamp to [0, 1], scale by 255, round half up.
std::vector<std::uint8_t> tensor_to_image(const Tensor3& a);

struct CorruptedImage {
    Tensor3 corrupted;
    /// Linear pixel indices i*n2 + j, ascending.
    std::vector<std::size_t> mask;
};

/// Replace floor(fraction * n1 * n2) whole tubes, chosen uniformly without
/// replacement, with independent uniform [0, 1] values in every channel.
CorruptedImage corrupt_pixels(const Tensor3& a, double fraction, std::uint64_t seed);

/// 10 log10(||ref||_inf^2 / mean squared error). Identical tensors give
/// +infinity. Throws ShapeMismatch or ZeroReference.
double psnr(const Tensor3& reference, const Tensor3& estimate);

/// Ordered key/value report rendered as JSON or as a two-column CSV.
class Report {
public:
    using Value = std::variant<std::int64_t, double, bool, std::string>;

    Report& set(std::string key, double value) { return put(std::move(key), value); }
    Report& set(std::string key, bool value) { return put(std::move(key), value); }
    Report& set(std::string key, std::string value) { return put(std::move(key), std::move(value)); }
    Report& set(std::string key, const char* value) { return put(std::move(key), std::string(value)); }
    Report& set(std::string key, std::int64_t value) { return put(std::move(key), value); }
    Report& set(std::string key, std::size_t value) {
        return put(std::move(key), static_cast<std::int64_t>(value));
    }
    Report& set(std::string key, int value) {
        return put(std::move(key), static_cast<std::int64_t>(value));
    }

    const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }
    const Value* find(const std::string& key) const;

    /// Pretty-printed JSON object, keys in insertion order.
    std::string to_json() const;
    /// Header "key,value", one row per field.
    std::string to_csv() const;

private:
    Report& put(std::string key, Value value);

    std::vector<std::pair<std::string, Value>> fields_;
};

/// Header "r_frac,rho_s,trials,successes", one row per cell in grid order.
std::string grid_to_csv(const PhaseGrid& grid);
/// {"cells": [{"r_frac":..,"rho_s":..,"trials":..,"successes":..}, ...]}
std::string grid_to_json(const PhaseGrid& grid);

}  // namespace trpca
