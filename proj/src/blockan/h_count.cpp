#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/blockan/cartan.hpp"
#include "wblocks/error.hpp"

#include <map>

namespace wblocks {

mpz_class h_count(const Composition& lambda)
{
    if (lambda.empty())
        return 1;
    // rho_i value -> number of admissible prefixes
    std::map<int, mpz_class> states{{0, 1}};
    for (int i = lambda.min_support() - 1; i <= lambda.max_support(); ++i) {
        std::map<int, mpz_class> next;
        for (const auto& [r, c] : states) {
            int bound = lambda[i + 1] + std::min(lambda[i], r);
            for (int v = 0; v <= bound; ++v)
                next[v] += c;
        }
        states = std::move(next);
    }
    // past the support the next bound is min(0, .) = 0, so every state closes
    mpz_class total = 0;
    for (const auto& [r, c] : states)
        total += c;
    return total;
}

namespace {

mpz_class gamma_factorials(const BlockKey& xi)
{
    mpz_class p = 1;
    const Composition gamma = xi.gamma();
    for (const auto& [i, g] : gamma.parts())
        p *= factorial(g);
    return p;
}

} // namespace

mpz_class end_dim(const BlockKey& xi, int i)
{
    require(xi.t >= 1, "end_dim: atypicality must be positive");
    const Composition gamma = xi.gamma();
    const int t = xi.t;
    const int gi = gamma[i];
    const int gj = gamma[i + 1];
    mpq_class sum = 0;
    for (int r = 0; r <= t; ++r)
        sum += mpq_class(binomial(t, r) * factorial(gi) * factorial(gj),
                         factorial(gi + t - r) * factorial(gj + r));
    sum *= mpq_class(factorial(xi.m) * factorial(xi.n), factorial(t) * gamma_factorials(xi));
    sum.canonicalize();
    ensure(sum.get_den() == 1, "end_dim: non-integral result");
    return sum.get_num();
}

mpq_class end_dim_stable(const BlockKey& xi)
{
    require(xi.t >= 1, "end_dim_stable: atypicality must be positive");
    mpz_class ft = factorial(xi.t);
    mpq_class n(factorial(xi.m) * factorial(xi.n) * binomial(2 * xi.t, xi.t), ft * ft * gamma_factorials(xi));
    n.canonicalize();
    return n;
}

mpq_class d_invariant(const BlockKey& xi, int i)
{
    mpq_class d = mpq_class(binomial(2 * xi.t, xi.t) * end_dim(xi, i)) / end_dim_stable(xi);
    d.canonicalize();
    return d;
}

bool neighbor_test(const BlockKey& xi, int i, int j)
{
    require(xi.t >= 1, "neighbor_test: atypicality must be positive");
    return cartan_entry(xi, Composition::unit(i, xi.t), Composition::unit(j, xi.t)) != 0;
}

} // namespace wblocks
