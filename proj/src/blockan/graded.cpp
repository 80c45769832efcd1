#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/blockan/cartan.hpp"
#include "wblocks/blockan/detail.hpp"
#include "wblocks/error.hpp"

namespace wblocks {

namespace {

long choose2(long x)
{
    return x * (x - 1) / 2;
}

} // namespace

Laurent graded_cartan(const BlockKey& xi, const Composition& lambda, const Composition& kappa)
{
    require(lambda.total() == xi.t && kappa.total() == xi.t, "graded_cartan: size mismatch");
    auto rho = cartan_rho(lambda, kappa);
    if (!rho)
        return Laurent();
    const Composition gamma = xi.gamma();
    Laurent sum;
    detail::tau_sum(lambda, *rho, gamma, [&](const detail::TauTerm& tt) {
        long s = choose2(xi.m) + choose2(xi.n);
        std::vector<int> top;
        std::vector<int> bot;
        Laurent term(1);
        for (std::size_t k = 0; k < tt.beta.size(); ++k) {
            int i = tt.lo + static_cast<int>(k);
            int b = tt.beta[k];
            int ti = tt.tau[k];
            int bg = b + gamma[i];
            s += static_cast<long>(2 * ti - lambda[i] - (*rho)[i]) * bg - choose2(b) - choose2(bg);
            term *= qbinom(b, ti - lambda[i]) * qbinom(b, ti - (*rho)[i]);
            // {beta_i, beta_i + gamma_i} = {beta_i + mu_i, beta_i + nu_i}
            top.push_back(b + xi.mu[i]);
            bot.push_back(b + xi.nu[i]);
        }
        for (const auto& [i, g] : gamma.parts())
            if (i < tt.lo || i >= tt.lo + static_cast<int>(tt.beta.size())) {
                s -= choose2(g);
                top.push_back(xi.mu[i]);
                bot.push_back(xi.nu[i]);
            }
        if (term.is_zero())
            return;
        term *= qmultinomial(top) * qmultinomial(bot);
        sum += term.shifted(static_cast<int>(s));
    });
    if (!sum.is_zero())
        ensure(sum.nonnegative() && sum.min_degree() >= 0, "graded_cartan: result not in N[q]: " + sum.to_string());
    return sum;
}

} // namespace wblocks
