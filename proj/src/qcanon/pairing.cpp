#include "wblocks/qcanon/pairing.hpp"

#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/error.hpp"

#include <algorithm>
#include <vector>

namespace wblocks {

namespace {

int choose2(int x)
{
    return x * (x - 1) / 2;
}

void check_support(const Composition& c, int N, const char* what)
{
    if (c.empty())
        return;
    if (c.min_support() < 1 || c.max_support() > N)
        throw InvalidArgument(std::string("pairing_formula: support of ") + what + " outside [1, N]");
}

} // namespace

Laurent pairing_formula(const BlockKey& xi, const Composition& kappa, const Composition& lambda, int N)
{
    xi.validate();
    require(N >= 1, "pairing_formula: N must be positive");
    require(kappa.total() == xi.t && lambda.total() == xi.t, "pairing_formula: |kappa| and |lambda| must equal t");
    for (const auto* c : {&kappa, &lambda, &xi.mu, &xi.nu})
        check_support(*c, N, "a composition");

    // index 1..N+1, with lambda_{N+1} = 0
    std::vector<int> lam(N + 2, 0);
    std::vector<int> gam(N + 2, 0);
    std::vector<int> mu(N + 2, 0);
    std::vector<int> nu(N + 2, 0);
    for (int i = 1; i <= N; ++i) {
        lam[i] = lambda[i];
        mu[i] = xi.mu[i];
        nu[i] = xi.nu[i];
        gam[i] = mu[i] + nu[i];
    }

    // kappa = lambda + sum_i (lambda_{i+1} - rho_{i+1}) alpha_i, rho_1 = lambda_1
    std::vector<int> rho(N + 2, 0);
    rho[1] = lam[1];
    int theta = 0;
    for (int i = 1; i < N; ++i) {
        theta += kappa[i] - lam[i];
        rho[i + 1] = lam[i + 1] - theta;
        if (rho[i + 1] < 0 || rho[i + 1] > lam[i + 1] + std::min(lam[i], rho[i]))
            return Laurent();
    }

    std::vector<int> lo(N + 2, 0);
    std::vector<int> hi(N + 2, 0);
    for (int i = 1; i < N; ++i) {
        lo[i + 1] = std::max(lam[i + 1], rho[i + 1]);
        hi[i + 1] = lam[i + 1] + std::min(lam[i], rho[i]);
        if (lo[i + 1] > hi[i + 1])
            return Laurent();
    }

    const int m = xi.m;
    const int n = xi.n;
    std::vector<int> tau(N + 2, 0);
    tau[1] = lam[1];
    tau[N + 1] = 0;
    for (int i = 2; i <= N; ++i)
        tau[i] = lo[i];

    Laurent total;
    while (true) {
        std::vector<int> beta(N + 1, 0);
        bool ok = true;
        for (int i = 1; i <= N; ++i) {
            beta[i] = lam[i + 1] + tau[i] - tau[i + 1];
            if (beta[i] < 0)
                ok = false;
        }
        if (ok) {
            Laurent term(1);
            int s = choose2(m) + choose2(n);
            for (int i = 2; i <= N && !term.is_zero(); ++i) {
                term *= qbinom(beta[i], tau[i] - lam[i]) * qbinom(beta[i], tau[i] - rho[i]);
                s += (2 * tau[i] - lam[i] - rho[i]) * (beta[i] + gam[i]);
            }
            if (!term.is_zero()) {
                std::vector<int> top;
                std::vector<int> bot;
                for (int i = 1; i <= N; ++i) {
                    s -= choose2(beta[i]) + choose2(beta[i] + gam[i]);
                    top.push_back(beta[i] + mu[i]);
                    bot.push_back(beta[i] + nu[i]);
                }
                // [m]![n]! / prod [beta_i]! [beta_i + gamma_i]!, using mu_i nu_i = 0
                term *= qmultinomial(top) * qmultinomial(bot);
                total += term.shifted(s);
            }
        }
        int i = N;
        while (i >= 2 && tau[i] == hi[i]) {
            tau[i] = lo[i];
            --i;
        }
        if (i < 2)
            break;
        ++tau[i];
    }
    return total;
}

} // namespace wblocks
