#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trpca/tensor.hpp"

namespace trpca {

/// Relative tolerance used when reporting the tubal rank of a recovered
/// low-rank part. ADMM output carries O(eps) noise, so the factorization
/// default of 1e-10 would overcount.
inline constexpr double kSolutionRankTol = 1e-6;

struct SolverConfig {
    /// Weight of the l1 term. Unset means default_lambda of the input shape.
    std::optional<double> lambda;
    double rho = 1.1;
    double mu0 = 1e-3;
    double mu_max = 1e10;
    double eps = 1e-8;
    std::size_t max_iters = 500;

    /// Throws InvalidArgument when the invariants do not hold.
    void validate() const;
};

struct TrpcaSolution {
    Tensor3 l_hat;
    Tensor3 e_hat;
    std::size_t iters = 0;
    /// ||l_hat + e_hat - x||_inf at exit.
    double final_residual = 0.0;
    bool converged = false;
    double lambda = 0.0;
    /// Per iteration: max of the three stopping quantities.
    std::vector<double> residual_history;
    /// Per iteration: the mu used for that iteration's updates.
    std::vector<double> mu_history;
};

/// 1 / sqrt(max(n1, n2) * n3).
double default_lambda(std::size_t n1, std::size_t n2, std::size_t n3);

/// Solve min ||L||_* + lambda ||E||_1 s.t. x = L + E by ADMM.
///
/// Each iteration: L = tsvt(x - E - Y/mu, 1/mu), E = soft(x - L - Y/mu,
/// lambda/mu), Y += mu (L + E - x), mu = min(rho mu, mu_max). Stops once the
/// inf-norms of the L change, the E change and the constraint violation are
/// all <= eps. Running out of iterations is reported through
/// TrpcaSolution::converged, not thrown.
TrpcaSolution solve(const Tensor3& x, const SolverConfig& cfg = {});

}  // namespace trpca
