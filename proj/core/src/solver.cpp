#include "trpca/solver.hpp"

#include <algorithm>
#include <cmath>

#include "trpca/prox.hpp"

namespace trpca {

void SolverConfig::validate() const {
    if (lambda && !(*lambda > 0.0)) throw InvalidArgument("lambda must be positive");
    if (!(rho > 1.0)) throw InvalidArgument("rho must be > 1");
    if (!(mu0 > 0.0) || !(mu_max > 0.0) || !(mu0 < mu_max)) {
        throw InvalidArgument("need 0 < mu0 < mu_max");
    }
    if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
    if (max_iters == 0) throw InvalidArgument("max_iters must be positive");
}

double default_lambda(std::size_t n1, std::size_t n2, std::size_t n3) {
    if (n1 == 0 || n2 == 0 || n3 == 0) throw InvalidArgument("default_lambda: empty shape");
    return 1.0 / std::sqrt(static_cast<double>(std::max(n1, n2)) * static_cast<double>(n3));
}

TrpcaSolution solve(const Tensor3& x, const SolverConfig& cfg) {
    cfg.validate();
    if (!all_finite(x)) throw InvalidArgument("solve: input has non-finite entries");

    TrpcaSolution sol;
    if (x.empty()) {
        sol.converged = true;
        sol.l_hat = sol.e_hat = x;
        return sol;
    }
    sol.lambda = cfg.lambda.value_or(default_lambda(x.n1(), x.n2(), x.n3()));
    sol.l_hat = Tensor3(x.shape());
    sol.e_hat = Tensor3(x.shape());
    Tensor3 dual(x.shape());
    double mu = cfg.mu0;

    Tensor3 work(x.shape());
    while (sol.iters < cfg.max_iters) {
        sol.mu_history.push_back(mu);
        const double inv_mu = 1.0 / mu;

        work.array() = x.array() - sol.e_hat.array() - inv_mu * dual.array();
        Tensor3 l_next = tsvt(work, inv_mu);

        work.array() = x.array() - l_next.array() - inv_mu * dual.array();
        Tensor3 e_next = soft_threshold(work, sol.lambda * inv_mu);

        work.array() = l_next.array() + e_next.array() - x.array();
        dual.array() += mu * work.array();
        mu = std::min(cfg.rho * mu, cfg.mu_max);

        const double dl = (l_next.array() - sol.l_hat.array()).abs().maxCoeff();
        const double de = (e_next.array() - sol.e_hat.array()).abs().maxCoeff();
        const double feas = work.array().abs().maxCoeff();
        sol.l_hat = std::move(l_next);
        sol.e_hat = std::move(e_next);
        sol.final_residual = feas;
        sol.residual_history.push_back(std::max({dl, de, feas}));
        ++sol.iters;

        if (dl <= cfg.eps && de <= cfg.eps && feas <= cfg.eps) {
            sol.converged = true;
            break;
        }
    }
    return sol;
}

}  // namespace trpca
