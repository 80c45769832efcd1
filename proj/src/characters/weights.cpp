#include "wblocks/characters/weights.hpp"

#include "wblocks/error.hpp"

#include <algorithm>
#include <numeric>

namespace wblocks {

BoxOrder natural_order(const Pyramid& p)
{
    BoxOrder o(p.size());
    std::iota(o.begin(), o.end(), 1);
    return o;
}

BoxOrder column_order(const Pyramid& p)
{
    BoxOrder o = natural_order(p);
    std::stable_sort(o.begin(), o.end(), [&](int i, int j) {
        if (p.col(i) != p.col(j))
            return p.col(i) < p.col(j);
        return p.row(i) < p.row(j);
    });
    return o;
}

namespace {

std::vector<int> positions(const Pyramid& p, const BoxOrder& order)
{
    require(static_cast<int>(order.size()) == p.size(), "order: wrong length");
    std::vector<int> pos(p.size() + 1, -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
        int b = order[k];
        require(b >= 1 && b <= p.size() && pos[b] < 0, "order: not a permutation");
        pos[b] = static_cast<int>(k);
    }
    return pos;
}

bool odd(const Pyramid& p, int j)
{
    return j > p.m();
}

} // namespace

bool is_normal_order(const Pyramid& p, const BoxOrder& order)
{
    auto pos = positions(p, order);
    for (int i = 1; i < p.size(); ++i)
        if (odd(p, i) == odd(p, i + 1) && pos[i] > pos[i + 1])
            return false;
    return true;
}

WeightVec rho_order(const Pyramid& p, const BoxOrder& order)
{
    auto pos = positions(p, order);
    WeightVec rho(p.size(), 0);
    for (int j = 1; j <= p.size(); ++j) {
        int v = 0;
        for (int i = 1; i <= p.size(); ++i) {
            if (odd(p, i) && pos[i] <= pos[j])
                ++v;
            if (!odd(p, i) && pos[i] < pos[j])
                --v;
        }
        rho[j - 1] = v;
    }
    return rho;
}

WeightVec tableau_weight(const Pyramid& p, const BoxOrder& order, const Tableau& a)
{
    require(a.pyramid() == p, "tableau_weight: pyramid mismatch");
    WeightVec rho = rho_order(p, order);
    WeightVec w(p.size());
    for (int j = 1; j <= p.size(); ++j)
        w[j - 1] = a.entry(j) - rho[j - 1];
    return w;
}

int parity_of(const Pyramid& p, const WeightVec& w)
{
    require(static_cast<int>(w.size()) == p.size(), "parity_of: wrong length");
    long s = 0;
    for (int j = p.m() + 1; j <= p.size(); ++j)
        s += w[j - 1];
    s += (p.n() - p.m() + 1) / 2;
    s += static_cast<long>(p.m()) * p.s_minus();
    return static_cast<int>(((s % 2) + 2) % 2);
}

namespace {

// pairing coordinates <-> delta coordinates differ by the sign (-1)^{|j|}
std::vector<int> to_delta(const Pyramid& p, const WeightVec& w)
{
    std::vector<int> c = w;
    for (int j = p.m() + 1; j <= p.size(); ++j)
        c[j - 1] = -c[j - 1];
    return c;
}

long height(const std::vector<int>& top, const std::vector<int>& c)
{
    long h = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
        h += static_cast<long>(j + 1) * (c[j] - top[j]);
    return h;
}

} // namespace

WeightChar verma_char_trunc(const Pyramid& p, const BoxOrder& order, const Tableau& a, int depth)
{
    if (!is_normal_order(p, order))
        throw InvalidArgument("verma_char_trunc: order is not normal");
    require(depth >= 0, "verma_char_trunc: negative depth");
    auto pos = positions(p, order);
    const int k = p.size();
    const std::vector<int> ref = to_delta(p, tableau_weight(p, natural_order(p), a));

    // delta coordinates -> coefficient
    std::map<std::vector<int>, mpz_class> cur;
    cur[to_delta(p, tableau_weight(p, order, a))] = 1;

    // (k, l) with k before l in the order
    std::vector<std::pair<int, int>> odd_pairs;
    std::vector<std::pair<int, int>> even_pairs;
    for (int x = 1; x <= k; ++x)
        for (int y = 1; y <= k; ++y)
            if (pos[x] < pos[y])
                (odd(p, x) != odd(p, y) ? odd_pairs : even_pairs).emplace_back(x, y);

    for (auto [kk, ll] : odd_pairs) {
        std::map<std::vector<int>, mpz_class> next = cur;
        for (const auto& [w, c] : cur) {
            auto v = w;
            ++v[ll - 1];
            --v[kk - 1];
            next[v] += c;
        }
        cur = std::move(next);
    }
    // even factors raise the height, so anything already above depth stays there
    std::erase_if(cur, [&](const auto& kv) { return kv.second == 0 || height(ref, kv.first) > depth; });

    for (auto [kk, ll] : even_pairs) {
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [w, c] : cur) {
            auto v = w;
            while (height(ref, v) <= depth) {
                next[v] += c;
                ++v[ll - 1];
                --v[kk - 1];
            }
        }
        cur = std::move(next);
    }

    WeightChar out;
    out.depth = depth;
    for (const auto& [c, coef] : cur) {
        if (coef == 0)
            continue;
        std::vector<int> w = c;
        for (int j = p.m() + 1; j <= k; ++j)
            w[j - 1] = -w[j - 1];
        out.terms[w] = coef;
    }
    return out;
}

HwScalars hw_scalars(const Tableau& a)
{
    auto elem = [](const std::vector<int>& xs) {
        std::vector<mpz_class> e(xs.size() + 1, 0);
        e[0] = 1;
        for (int x : xs)
            for (std::size_t r = xs.size(); r >= 1; --r)
                e[r] += e[r - 1] * x;
        return e;
    };
    return {elem(a.top()), elem(a.bottom())};
}

} // namespace wblocks
