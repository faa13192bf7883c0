#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "trpca/solver.hpp"
#include "trpca/tensor.hpp"

namespace trpca {

/// p * ctranspose(q) with p: n1 x r x n3 and q: n2 x r x n3, entries i.i.d.
/// N(0, 1/n1). Tubal rank is r with probability one.
Tensor3 gen_low_tubal_rank(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t r,
                           std::uint64_t seed);

enum class SparseMode {
    /// Exactly m entries, support uniform without replacement, values +-1.
    CountUniform,
    /// Each entry independently +1 w.p. rho/2, -1 w.p. rho/2, else 0.
    BernoulliRho,
};

/// m_or_rho is the support size in CountUniform mode and the rate in
/// BernoulliRho mode. Throws CountOutOfRange when it is outside the valid
/// range for the mode.
Tensor3 gen_sparse_bernoulli(std::size_t n1, std::size_t n2, std::size_t n3, double m_or_rho,
                             SparseMode mode, std::uint64_t seed);

struct PhaseCell {
    double r_frac = 0.0;
    double rho_s = 0.0;
    std::size_t trials = 0;
    std::size_t successes = 0;
};

struct PhaseGridSpec {
    std::size_t n = 0;
    std::size_t n3 = 0;
    std::vector<double> r_fracs;
    std::vector<double> rho_ss;
    std::size_t trials = 1;
    double success_tol = 1e-3;
    std::uint64_t seed = 0;
    /// Solver settings; lambda is always the default for (n, n, n3).
    SolverConfig solver{};
};

/// Cells in row-major order: r_fracs index outer, rho_ss index inner.
struct PhaseGrid {
    std::vector<double> r_fracs;
    std::vector<double> rho_ss;
    std::vector<PhaseCell> cells;

    const PhaseCell& at(std::size_t r_index, std::size_t rho_index) const {
        return cells[r_index * rho_ss.size() + rho_index];
    }
};

/// Rank used for a grid fraction: round(r_frac * n), at least 1.
std::size_t grid_rank(double r_frac, std::size_t n);

/// Seeds for trial t of cell c: stream (c, t) of the grid seed, split into a
/// low-rank seed and a sparse seed. Exposed so a single trial can be replayed.
struct TrialSeeds {
    std::uint64_t low_rank;
    std::uint64_t sparse;
};
TrialSeeds trial_seeds(std::uint64_t seed, std::size_t cell, std::size_t trial);

/// Run every cell of the grid. A trial succeeds when
/// ||l_hat - l0||_F / ||l0||_F <= success_tol.
PhaseGrid phase_grid(const PhaseGridSpec& spec);

}  // namespace trpca
