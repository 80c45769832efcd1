#include "wblocks/oracles/oracles.hpp"

#include "wblocks/center/center.hpp"
#include "wblocks/combinat/bruhat.hpp"
#include "wblocks/error.hpp"
#include "wblocks/qcanon/salgebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wblocks::oracle {

int atyp_brute(const Tableau& a)
{
    std::vector<int> top = a.top();
    std::vector<int> bot = a.bottom();
    std::sort(top.begin(), top.end());
    std::sort(bot.begin(), bot.end());
    const int s = a.pyramid().s_minus();
    int best = 0;
    do {
        std::vector<int> b = bot;
        do {
            int d = 0;
            for (std::size_t i = 0; i < top.size(); ++i)
                if (top[i] == b[s + i])
                    ++d;
            best = std::max(best, d);
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(top.begin(), top.end()));
    return best;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<int> linkage_classes(const Pyramid& p, Window w)
{
    const std::vector<Tableau> all = tableaux_in(p, w);
    std::map<Tableau, int> index;
    for (std::size_t r = 0; r < all.size(); ++r)
        index.emplace(all[r], static_cast<int>(r));
    UnionFind uf(static_cast<int>(all.size()));
    for (std::size_t r = 0; r < all.size(); ++r) {
        const Tableau& a = all[r];
        // adjacent transpositions generate all row permutations
        for (std::size_t i = 0; i + 1 < a.top().size(); ++i) {
            auto top = a.top();
            std::swap(top[i], top[i + 1]);
            uf.unite(static_cast<int>(r), index.at(Tableau(p, top, a.bottom())));
        }
        for (std::size_t i = 0; i + 1 < a.bottom().size(); ++i) {
            auto bot = a.bottom();
            std::swap(bot[i], bot[i + 1]);
            uf.unite(static_cast<int>(r), index.at(Tableau(p, a.top(), bot)));
        }
        for (const Tableau& b : down_up(a)) {
            auto it = index.find(b);
            if (it != index.end())
                uf.unite(static_cast<int>(r), it->second);
        }
    }
    std::vector<int> out(all.size());
    for (std::size_t r = 0; r < all.size(); ++r)
        out[r] = uf.find(static_cast<int>(r));
    return out;
}

mpz_class h_brute(const Composition& lambda)
{
    if (lambda.empty())
        return 1;
    const int lo = lambda.min_support();
    const int hi = lambda.max_support() + 1;
    const int cap = 2 * lambda.total();
    const int width = hi - lo + 1;
    double states = std::pow(cap + 1.0, width);
    if (states > 5e7)
        throw ResourceError("h_brute: search space too large");
    std::vector<int> rho(width, 0);
    mpz_class count = 0;
    while (true) {
        bool ok = true;
        for (int k = 0; k < width && ok; ++k) {
            int i = lo + k;
            int prev_rho = k == 0 ? 0 : rho[k - 1];
            if (rho[k] > lambda[i] + std::min(lambda[i - 1], prev_rho))
                ok = false;
        }
        if (ok)
            ++count;
        int pos = width - 1;
        while (pos >= 0 && rho[pos] == cap)
            rho[pos--] = 0;
        if (pos < 0)
            break;
        ++rho[pos];
    }
    return count;
}

std::map<Composition, Laurent> u_in_d_solve(const Composition& lambda, const BlockKey& xi, int N)
{
    const int t = xi.t;
    const int m = xi.m;
    const int n = xi.n;
    std::map<Key, Composition> kappa_of;
    std::map<Composition, SVec> d;
    for (const Composition& kappa : compositions_in(t, {1, N})) {
        Key k = block_tableau_key(kappa, xi.mu, xi.nu);
        kappa_of.emplace(k, kappa);
        d.emplace(kappa, d_basis(N, m, n, k));
    }
    auto stat = [](const Composition& c) {
        long s = 0;
        for (const auto& [i, v] : c.parts())
            s += static_cast<long>(i) * v;
        return s;
    };

    SVec rest;
    rest.N = N;
    rest.m = m;
    rest.n = n;
    rest.add(block_tableau_key(lambda, xi.mu, xi.nu), Laurent(1));
    std::map<Composition, Laurent> out;
    std::size_t guard = 0;
    while (!rest.terms.empty()) {
        ensure(++guard <= kappa_of.size() + 1, "u_in_d_solve: elimination does not terminate");
        const Composition* lead = nullptr;
        for (const auto& [k, c] : rest.terms) {
            auto it = kappa_of.find(k);
            ensure(it != kappa_of.end(), "u_in_d_solve: monomial outside the block");
            if (!lead || stat(it->second) > stat(*lead))
                lead = &it->second;
        }
        const Key lead_key = block_tableau_key(*lead, xi.mu, xi.nu);
        const SVec& dk = d.at(*lead);
        auto lc = dk.terms.find(lead_key);
        ensure(lc != dk.terms.end(), "u_in_d_solve: d basis is not triangular");
        Laurent coef = exact_div(rest.terms.at(lead_key), lc->second);
        out[*lead] = coef;
        SVec sub = dk;
        sub *= -coef;
        rest += sub;
    }
    return out;
}

namespace {

MultiPoly random_coeff(std::mt19937_64& rng, int m, int n)
{
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    int a = num(rng);
    if (a == 0)
        a = 1;
    return MultiPoly::constant(m, n, mpq_class(a, den(rng)));
}

MultiPoly power(const MultiPoly& f, int e, int m, int n)
{
    MultiPoly out = MultiPoly::constant(m, n, 1);
    for (int k = 0; k < e; ++k)
        out = out * f;
    return out;
}

} // namespace

MultiPoly random_symmetric(std::mt19937_64& rng, int m, int n, int max_deg)
{
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> nterms(1, 4);
    MultiPoly f(m, n);
    const bool super = coin(rng) == 1;
    const int terms = nterms(rng);
    for (int r = 0; r < terms; ++r) {
        MultiPoly mono = random_coeff(rng, m, n);
        std::uniform_int_distribution<int> degd(0, max_deg);
        int budget = degd(rng);
        while (budget > 0) {
            std::uniform_int_distribution<int> pick(1, budget);
            int d = pick(rng);
            budget -= d;
            if (super) {
                mono = mono * e_super(d, m, n);
            } else if (coin(rng) == 1 && m > 0) {
                mono = mono * (d <= m ? elementary_x(d, m, n) : power(elementary_x(1, m, n), d, m, n));
            } else {
                mono = mono * complete_y(d, m, n);
            }
        }
        f += mono;
    }
    return f;
}

} // namespace wblocks::oracle
