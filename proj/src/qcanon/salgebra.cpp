#include "wblocks/qcanon/salgebra.hpp"

#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/error.hpp"

#include <algorithm>
#include <mutex>

namespace wblocks {

void SVec::add(const Key& k, const Laurent& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

SVec& SVec::operator+=(const SVec& o)
{
    require(o.N == N && o.m == m && o.n == n, "S: shape mismatch");
    for (const auto& [k, c] : o.terms)
        add(k, c);
    return *this;
}

SVec& SVec::operator*=(const Laurent& c)
{
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms)
        v *= c;
    return *this;
}

bool key_antidominant(int m, const Key& key)
{
    for (int i = 1; i < m; ++i)
        if (key[i - 1] > key[i])
            return false;
    for (std::size_t i = m + 1; i < key.size(); ++i)
        if (key[i - 1] < key[i])
            return false;
    return true;
}

std::pair<int, Key> straighten(int m, const Key& key)
{
    require(m >= 0 && m <= static_cast<int>(key.size()), "straighten: bad split");
    int ell = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (key[i] > key[j])
                ++ell;
    for (std::size_t i = m; i < key.size(); ++i)
        for (std::size_t j = i + 1; j < key.size(); ++j)
            if (key[i] < key[j])
                ++ell;
    Key sorted = key;
    std::sort(sorted.begin(), sorted.begin() + m);
    std::sort(sorted.begin() + m, sorted.end(), std::greater<>());
    return {ell, sorted};
}

SWord key_word(int m, const Key& key)
{
    SWord w;
    for (std::size_t r = 0; r < key.size(); ++r)
        w.push_back({static_cast<int>(r) < m ? 'x' : 'y', key[r]});
    return w;
}

namespace {

Laurent neg_q(int e)
{
    return Laurent::monomial(e, (e % 2 == 0) ? 1 : -1);
}

using WordComb = std::vector<std::pair<SWord, Laurent>>;

// One rewriting step at the first out-of-order adjacent pair, or nullopt if normal.
bool rewrite(const SWord& w, WordComb& out)
{
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        const SGen a = w[p];
        const SGen b = w[p + 1];
        auto with = [&](std::initializer_list<SGen> mid) {
            SWord nw(w.begin(), w.begin() + p);
            nw.insert(nw.end(), mid);
            nw.insert(nw.end(), w.begin() + p + 2, w.end());
            return nw;
        };
        if (a.kind == 'y' && b.kind == 'x') {
            if (a.index != b.index) {
                out.emplace_back(with({b, a}), Laurent(1));
                return true;
            }
            int i = a.index;
            out.emplace_back(with({b, a}), Laurent::q(1));
            Laurent d = Laurent::q(1) - Laurent::q(-1);
            for (int r = 1; r <= i - 1; ++r)
                out.emplace_back(with({{'x', i - r}, {'y', i - r}}), d * neg_q(r));
            return true;
        }
        if (a.kind == 'x' && b.kind == 'x' && a.index > b.index) {
            out.emplace_back(with({b, a}), Laurent::q(1));
            return true;
        }
        if (a.kind == 'y' && b.kind == 'y' && a.index < b.index) {
            out.emplace_back(with({b, a}), Laurent::q(1));
            return true;
        }
    }
    return false;
}

std::mutex g_nf_mutex;
std::map<std::pair<int, SWord>, SVec> g_nf_cache;

} // namespace

SVec normal_form(int N, const SWord& w)
{
    {
        std::lock_guard<std::mutex> lock(g_nf_mutex);
        auto it = g_nf_cache.find({N, w});
        if (it != g_nf_cache.end())
            return it->second;
    }
    SVec out;
    out.N = N;
    for (const SGen& g : w) {
        require(g.index >= 1 && g.index <= N, "S: generator index out of range");
        (g.kind == 'x' ? out.m : out.n) += 1;
    }
    WordComb next;
    if (!rewrite(w, next)) {
        Key k;
        for (const SGen& g : w)
            k.push_back(g.index);
        out.add(k, Laurent(1));
    } else {
        for (const auto& [nw, c] : next) {
            SVec part = normal_form(N, nw);
            part *= c;
            out += part;
        }
    }
    std::lock_guard<std::mutex> lock(g_nf_mutex);
    g_nf_cache.emplace(std::make_pair(N, w), out);
    return out;
}

std::vector<std::pair<SWord, Laurent>> z_words(int i)
{
    WordComb out;
    for (int r = 0; r <= i - 1; ++r)
        out.emplace_back(SWord{{'x', i - r}, {'y', i - r}}, neg_q(r));
    return out;
}

SVec eval_words(int N, int m, int n, const std::vector<std::pair<SWord, Laurent>>& ws)
{
    SVec out;
    out.N = N;
    out.m = m;
    out.n = n;
    for (const auto& [w, c] : ws) {
        SVec part = normal_form(N, w);
        if (part.terms.empty())
            continue;
        require(part.m == m && part.n == n, "S: word of the wrong degree");
        part *= c;
        out += part;
    }
    return out;
}

SVec word_product(int N, const std::vector<std::pair<SWord, Laurent>>& a, const std::vector<std::pair<SWord, Laurent>>& b)
{
    WordComb prod;
    int m = 0;
    int n = 0;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            SWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            prod.emplace_back(w, ca * cb);
        }
    if (!prod.empty())
        for (const SGen& g : prod.front().first)
            (g.kind == 'x' ? m : n) += 1;
    return eval_words(N, m, n, prod);
}

SVec d_basis(int N, int m, int n, const Key& key)
{
    require(static_cast<int>(key.size()) == m + n, "d_basis: key length mismatch");
    if (!key_antidominant(m, key))
        throw InvalidArgument("d_basis: tableau is not anti-dominant");
    std::map<int, int> top;
    std::map<int, int> bot;
    for (int r = 0; r < m; ++r)
        ++top[key[r]];
    for (int r = m; r < m + n; ++r)
        ++bot[key[r]];
    std::vector<int> cs;
    for (const auto& [v, c] : top)
        if (bot.count(v))
            cs.insert(cs.end(), std::min(c, bot[v]), v);
    std::vector<int> as;
    std::vector<int> bs;
    for (const auto& [v, c] : top)
        as.insert(as.end(), c - (bot.count(v) ? std::min(c, bot[v]) : 0), v);
    for (auto it = bot.rbegin(); it != bot.rend(); ++it)
        bs.insert(bs.end(), it->second - (top.count(it->first) ? std::min(it->second, top[it->first]) : 0), it->first);
    const int t = static_cast<int>(cs.size());
    int e = -t * (t - 1) / 2;
    for (int a : as)
        for (int c : cs)
            if (a > c)
                --e;
    for (int b : bs)
        for (int c : cs)
            if (b > c)
                --e;
    WordComb cur{{SWord{}, Laurent::q(e)}};
    for (int a : as)
        for (auto& [w, c] : cur)
            w.push_back({'x', a});
    for (int c : cs) {
        WordComb next;
        for (const auto& [w, coef] : cur)
            for (const auto& [zw, zc] : z_words(c)) {
                SWord nw = w;
                nw.insert(nw.end(), zw.begin(), zw.end());
                next.emplace_back(nw, coef * zc);
            }
        cur = std::move(next);
    }
    for (int b : bs)
        for (auto& [w, c] : cur)
            w.push_back({'y', b});
    return eval_words(N, m, n, cur);
}

SVec project_to_S(const TensorVec& v, int m)
{
    const int n = v.length() - m;
    require(n >= 0 && v.signs() == tmn_signs(m, n), "project_to_S: signs must be +^m -^n");
    SVec out;
    out.N = v.N();
    out.m = m;
    out.n = n;
    for (const auto& [k, c] : v.terms()) {
        auto [ell, sorted] = straighten(m, k);
        out.add(sorted, c.shifted(ell));
    }
    return out;
}

SVec bar_S(const SVec& v)
{
    SVec out;
    out.N = v.N;
    out.m = v.m;
    out.n = v.n;
    for (const auto& [k, c] : v.terms) {
        SWord w = key_word(v.m, k);
        int e = 0;
        for (std::size_t r = 0; r < w.size(); ++r)
            for (std::size_t s = r + 1; s < w.size(); ++s) {
                const SGen a = w[r];
                const SGen b = w[s];
                int same = a.index == b.index ? 1 : 0;
                if (a.kind == b.kind)
                    e += same - 1;
                else
                    e -= same;
            }
        SWord rw(w.rbegin(), w.rend());
        SVec part = normal_form(v.N, rw);
        part *= c.bar().shifted(e);
        out += part;
    }
    return out;
}

std::map<Composition, Laurent> expand_u_in_d(const Composition& lambda, const Composition& mu, const Composition& nu,
                                             int N)
{
    const Composition gamma = mu + nu;
    std::map<Composition, Laurent> out{{lambda, Laurent(1)}};
    // theta_i on alpha_i, 1 <= i < N, 0 <= theta_i <= lambda_{i+1}
    for (int i = 1; i < N; ++i) {
        int cap = lambda[i + 1];
        if (cap == 0)
            continue;
        std::map<Composition, Laurent> next;
        for (const auto& [kappa, c] : out)
            for (int th = 0; th <= cap; ++th)
                next[add_alpha(kappa, i, th)] += c * qbinom(cap, th).shifted(th * (cap + gamma[i + 1]));
        out = std::move(next);
    }
    return out;
}

Key block_tableau_key(const Composition& lambda, const Composition& mu, const Composition& nu)
{
    Key k;
    Composition top = lambda + mu;
    Composition bot = lambda + nu;
    for (const auto& [i, c] : top.parts())
        k.insert(k.end(), c, i);
    for (auto it = bot.parts().rbegin(); it != bot.parts().rend(); ++it)
        k.insert(k.end(), it->second, it->first);
    return k;
}

} // namespace wblocks
