#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

namespace trpca {

std::uint64_t splitmix64(std::uint64_t x);

/// Seedable generator with reproducible output across platforms.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// The standard distributions are not (their algorithms are left to the
/// library), so the transforms to uniform and normal variates live here.
///
/// Streams: child(k) is a new generator seeded with
/// splitmix64(seed + 0x9e3779b97f4a7c15 * (k + 1)). Children depend only on
/// the parent seed and k, never on how much of the parent has been consumed,
/// so work split into independent streams can run in any order.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    Rng child(std::uint64_t stream) const;

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform integer in [0, n); n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

}  // namespace trpca
