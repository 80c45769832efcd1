#include "wblocks/combinat/block_key.hpp"

#include "wblocks/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace wblocks {

BlockKey BlockKey::make(Composition mu, Composition nu, int t)
{
    BlockKey k;
    k.m = mu.total() + t;
    k.n = nu.total() + t;
    k.mu = std::move(mu);
    k.nu = std::move(nu);
    k.t = t;
    k.validate();
    return k;
}

void BlockKey::validate() const
{
    require(t >= 0, "block key: negative atypicality");
    require(mu.total() == m - t, "block key: |mu| != m - t");
    require(nu.total() == n - t, "block key: |nu| != n - t");
    for (const auto& [i, v] : mu.parts())
        require(nu[i] == 0, "block key: mu and nu supports overlap");
}

BlockKey BlockKey::shifted(int s) const
{
    BlockKey k = *this;
    k.mu = mu.shifted(s);
    k.nu = nu.shifted(s);
    return k;
}

BlockKey BlockKey::reflected() const
{
    BlockKey k = *this;
    k.mu = mu.reflected();
    k.nu = nu.reflected();
    return k;
}

BlockKey BlockKey::swapped() const
{
    BlockKey k = *this;
    std::swap(k.mu, k.nu);
    std::swap(k.m, k.n);
    return k;
}

std::strong_ordering operator<=>(const BlockKey& a, const BlockKey& b)
{
    if (auto c = std::tie(a.m, a.n, a.t) <=> std::tie(b.m, b.n, b.t); c != 0)
        return c;
    if (auto c = a.mu <=> b.mu; c != 0)
        return c;
    return a.nu <=> b.nu;
}

std::string comp_short(const Composition& c)
{
    if (c.empty())
        return "0";
    std::ostringstream os;
    os << c.offset() << ":";
    auto d = c.dense();
    for (std::size_t k = 0; k < d.size(); ++k)
        os << (k ? "," : "") << d[k];
    return os.str();
}

std::string BlockKey::to_string() const
{
    return "mu=" + comp_short(mu) + ";nu=" + comp_short(nu) + ";t=" + std::to_string(t);
}

BlockKey block_key(const Tableau& a)
{
    std::map<int, int> top;
    std::map<int, int> bot;
    for (int v : a.top())
        ++top[v];
    for (int v : a.bottom())
        ++bot[v];
    BlockKey k;
    k.m = a.pyramid().m();
    k.n = a.pyramid().n();
    for (const auto& [v, c] : top) {
        int shared = std::min(c, bot.count(v) ? bot[v] : 0);
        k.t += shared;
        k.mu.set(v, c - shared);
    }
    for (const auto& [v, c] : bot)
        k.nu.set(v, c - std::min(c, top.count(v) ? top[v] : 0));
    return k;
}

Composition lambda_of(const Tableau& a)
{
    std::map<int, int> top;
    std::map<int, int> bot;
    for (int v : a.top())
        ++top[v];
    for (int v : a.bottom())
        ++bot[v];
    Composition lam;
    for (const auto& [v, c] : top)
        if (bot.count(v))
            lam.set(v, std::min(c, bot[v]));
    return lam;
}

Tableau tableau_of(const BlockKey& xi, const Composition& lambda, int s_minus)
{
    require(lambda.total() == xi.t, "tableau_of: |lambda| != t");
    std::vector<int> top;
    std::vector<int> bot;
    Composition topm = lambda + xi.mu;
    Composition botm = lambda + xi.nu;
    for (const auto& [i, c] : topm.parts())
        top.insert(top.end(), c, i);
    for (auto it = botm.parts().rbegin(); it != botm.parts().rend(); ++it)
        bot.insert(bot.end(), it->second, it->first);
    return Tableau(Pyramid(xi.m, xi.n, s_minus), top, bot);
}

BlockKey normalize_key(const BlockKey& xi)
{
    auto canon = [](const BlockKey& k) {
        Composition g = k.gamma();
        return g.empty() ? k : k.shifted(-g.min_support());
    };
    BlockKey a = canon(xi);
    BlockKey b = canon(xi.reflected());
    auto form = [](const BlockKey& k) {
        return std::make_tuple(k.gamma().dense(), k.mu.dense(0, k.gamma().empty() ? -1 : k.gamma().max_support()),
                               k.nu.dense(0, k.gamma().empty() ? -1 : k.gamma().max_support()));
    };
    return form(b) < form(a) ? b : a;
}

Signature invariant_signature(const BlockKey& xi)
{
    return {xi.t, xi.m, xi.n, comp_transpose(xi.gamma())};
}

namespace {

Composition swap_parts(const Composition& c, int i)
{
    Composition r = c;
    r.set(i, c[i + 1]);
    r.set(i + 1, c[i]);
    return r;
}

} // namespace

BlockKey derived_move(const BlockKey& xi, int i)
{
    BlockKey k = xi;
    k.mu = swap_parts(xi.mu, i);
    k.nu = swap_parts(xi.nu, i);
    return k;
}

std::set<BlockKey> morita_moves(const BlockKey& xi)
{
    std::set<BlockKey> out;
    out.insert(xi.shifted(1));
    out.insert(xi.shifted(-1));
    out.insert(xi.reflected());
    if (xi.m == xi.n)
        out.insert(xi.swapped());
    if (xi.t == 0) {
        Composition g = xi.gamma();
        if (!g.empty())
            for (int i = g.min_support() - 1; i <= g.max_support(); ++i)
                if (xi.mu[i] * xi.mu[i + 1] == 0 && xi.nu[i] * xi.nu[i + 1] == 0)
                    out.insert(derived_move(xi, i));
    }
    return out;
}

namespace {

template <class Step>
std::set<BlockKey> closure(const BlockKey& xi, int max_width, Step step)
{
    std::set<BlockKey> seen{normalize_key(xi)};
    std::vector<BlockKey> todo{*seen.begin()};
    while (!todo.empty()) {
        BlockKey cur = todo.back();
        todo.pop_back();
        for (const BlockKey& nb : step(cur)) {
            Composition g = nb.gamma();
            if (!g.empty() && g.max_support() - g.min_support() + 1 > max_width)
                continue;
            BlockKey k = normalize_key(nb);
            if (seen.insert(k).second)
                todo.push_back(k);
        }
    }
    return seen;
}

} // namespace

std::set<BlockKey> morita_closure(const BlockKey& xi, int max_width)
{
    return closure(xi, max_width, morita_moves);
}

std::set<BlockKey> derived_closure(const BlockKey& xi, int max_width)
{
    return closure(xi, max_width, [](const BlockKey& k) {
        std::set<BlockKey> out = morita_moves(k);
        Composition g = k.gamma();
        if (!g.empty())
            for (int i = g.min_support() - 1; i <= g.max_support(); ++i)
                out.insert(derived_move(k, i));
        return out;
    });
}

std::vector<BlockKey> block_keys_in(int m, int n, int t, Window w)
{
    require(t >= 0 && t <= std::min(m, n), "block_keys_in: t out of range");
    std::vector<BlockKey> out;
    for (const Composition& mu : compositions_in(m - t, w))
        for (const Composition& nu : compositions_in(n - t, w)) {
            bool disjoint = true;
            for (const auto& [i, v] : mu.parts())
                if (nu[i] != 0)
                    disjoint = false;
            if (!disjoint)
                continue;
            BlockKey k;
            k.mu = mu;
            k.nu = nu;
            k.t = t;
            k.m = m;
            k.n = n;
            out.push_back(k);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wblocks
