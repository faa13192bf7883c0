#include "trpca/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "trpca/rng.hpp"
#include "trpca/talgebra.hpp"

namespace trpca {

namespace {

Tensor3 gaussian(std::size_t n1, std::size_t n2, std::size_t n3, double stddev, Rng& rng) {
    Tensor3 t(n1, n2, n3);
    for (double& x : t.data()) x = stddev * rng.normal();
    return t;
}

}  // namespace

Tensor3 gen_low_tubal_rank(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t r,
                           std::uint64_t seed) {
    if (r > std::min(n1, n2)) {
        throw RankOutOfRange("gen_low_tubal_rank: r=" + std::to_string(r) +
                             " exceeds min(n1,n2)");
    }
    if (r == 0) return Tensor3(n1, n2, n3);
    Rng rng(seed);
    const double stddev = 1.0 / std::sqrt(static_cast<double>(n1));
    const Tensor3 p = gaussian(n1, r, n3, stddev, rng);
    const Tensor3 q = gaussian(n2, r, n3, stddev, rng);
    return tprod(p, ctranspose(q));
}

Tensor3 gen_sparse_bernoulli(std::size_t n1, std::size_t n2, std::size_t n3, double m_or_rho,
                             SparseMode mode, std::uint64_t seed) {
    Tensor3 e(n1, n2, n3);
    const std::size_t total = e.size();
    Rng rng(seed);
    auto data = e.data();

    if (mode == SparseMode::BernoulliRho) {
        const double rho = m_or_rho;
        if (!(rho >= 0.0 && rho <= 1.0)) {
            throw CountOutOfRange("Bernoulli rate " + std::to_string(rho) + " not in [0,1]");
        }
        for (double& x : data) {
            const double u = rng.uniform();
            x = u < 0.5 * rho ? 1.0 : (u < rho ? -1.0 : 0.0);
        }
        return e;
    }

    if (!(m_or_rho >= 0.0) || m_or_rho != std::floor(m_or_rho) ||
        m_or_rho > static_cast<double>(total)) {
        throw CountOutOfRange("support size " + std::to_string(m_or_rho) +
                              " not an integer in [0, " + std::to_string(total) + "]");
    }
    const auto m = static_cast<std::size_t>(m_or_rho);
    // Partial Fisher-Yates: the first m entries of order are a uniform
    // m-subset, drawn without replacement.
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t pick = i + rng.uniform_index(total - i);
        std::swap(order[i], order[pick]);
        data[order[i]] = (rng.next_u64() >> 63) ? 1.0 : -1.0;
    }
    return e;
}

std::size_t grid_rank(double r_frac, std::size_t n) {
    const auto r = static_cast<std::size_t>(std::llround(r_frac * static_cast<double>(n)));
    return std::clamp<std::size_t>(r, 1, n);
}

TrialSeeds trial_seeds(std::uint64_t seed, std::size_t cell, std::size_t trial) {
    const Rng stream = Rng(seed).child(cell).child(trial);
    return {stream.child(0).seed(), stream.child(1).seed()};
}

PhaseGrid phase_grid(const PhaseGridSpec& spec) {
    if (spec.r_fracs.empty() || spec.rho_ss.empty()) {
        throw InvalidArgument("phase_grid: empty grid");
    }
    if (spec.trials == 0) throw InvalidArgument("phase_grid: trials must be >= 1");

    PhaseGrid grid{spec.r_fracs, spec.rho_ss, {}};
    SolverConfig cfg = spec.solver;
    cfg.lambda.reset();

    const std::size_t n = spec.n;
    for (std::size_t a = 0; a < spec.r_fracs.size(); ++a) {
        for (std::size_t b = 0; b < spec.rho_ss.size(); ++b) {
            const std::size_t cell = a * spec.rho_ss.size() + b;
            PhaseCell result{spec.r_fracs[a], spec.rho_ss[b], spec.trials, 0};
            const std::size_t r = grid_rank(result.r_frac, n);
            for (std::size_t t = 0; t < spec.trials; ++t) {
                const TrialSeeds seeds = trial_seeds(spec.seed, cell, t);
                const Tensor3 l0 = gen_low_tubal_rank(n, n, spec.n3, r, seeds.low_rank);
                const Tensor3 e0 = gen_sparse_bernoulli(n, n, spec.n3, result.rho_s,
                                                        SparseMode::BernoulliRho, seeds.sparse);
                const TrpcaSolution sol = solve(l0 + e0, cfg);
                if (relative_error(sol.l_hat, l0) <= spec.success_tol) ++result.successes;
            }
            grid.cells.push_back(result);
        }
    }
    return grid;
}

}  // namespace trpca
