#include "wblocks/qcanon/canonical.hpp"

#include "wblocks/error.hpp"
#include "wblocks/qcanon/rmatrix.hpp"

#include <algorithm>
#include <set>

namespace wblocks {

int key_inversions(int m, const Key& key)
{
    int inv = 0;
    const int k = static_cast<int>(key.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (key[i] > key[j])
                ++inv;
    for (int i = m; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (key[i] < key[j])
                ++inv;
    return inv;
}

std::vector<Key> key_lower_covers(int m, const Key& key)
{
    std::vector<Key> out;
    const int k = static_cast<int>(key.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool top = j < m;
            bool bot = i >= m;
            if ((top && key[i] > key[j]) || (bot && key[i] < key[j])) {
                Key nk = key;
                std::swap(nk[i], nk[j]);
                out.push_back(nk);
            }
        }
    for (int i = 0; i < m; ++i)
        for (int j = m; j < k; ++j)
            if (key[i] == key[j] && key[i] > 1) {
                Key nk = key;
                --nk[i];
                --nk[j];
                out.push_back(nk);
            }
    return out;
}

bool key_bruhat_leq(int m, const Key& a, const Key& b)
{
    if (a == b)
        return true;
    std::set<Key> seen{b};
    std::vector<Key> todo{b};
    while (!todo.empty()) {
        Key cur = todo.back();
        todo.pop_back();
        for (Key& nb : key_lower_covers(m, cur)) {
            if (nb == a)
                return true;
            if (seen.insert(nb).second)
                todo.push_back(std::move(nb));
        }
    }
    return false;
}

namespace {

int entry_total(const Key& k)
{
    int s = 0;
    for (int v : k)
        s += v;
    return s;
}

// (entry sum, inversions, key): strictly increases along Bruhat covers upward
struct Stat {
    int m;
    bool operator()(const Key& a, const Key& b) const
    {
        auto ta = std::make_tuple(entry_total(a), key_inversions(m, a));
        auto tb = std::make_tuple(entry_total(b), key_inversions(m, b));
        if (ta != tb)
            return ta < tb;
        return a < b;
    }
};

} // namespace

std::vector<Key> weight_space(int N, int m, int n, const Key& key)
{
    const std::string sg = tmn_signs(m, n);
    const std::vector<int> w = key_weight(sg, key, N);
    const int k = m + n;
    double size = 1;
    for (int i = 0; i < k; ++i)
        size *= N;
    if (size > 4e6)
        throw ResourceError("weight space enumeration too large");
    std::vector<Key> out;
    Key cur(k, 1);
    while (true) {
        if (key_weight(sg, cur, N) == w)
            out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == N)
            cur[pos--] = 1;
        if (pos < 0)
            break;
        ++cur[pos];
    }
    std::sort(out.begin(), out.end(), Stat{m});
    return out;
}

struct CanonicalEngine::Space {
    std::mutex mutex;
    bool built = false;
    std::vector<Key> keys;
    std::map<Key, int> index;
    // column b: coefficients of psi^*(v_b) / psi(v_b) by row index
    std::vector<std::map<int, Laurent>> star_cols;
    std::vector<std::map<int, Laurent>> psi_cols;
    std::map<int, TensorVec> dual;
    std::map<int, TensorVec> canon;
};

CanonicalEngine::CanonicalEngine(int N, int m, int n) : N_(N), m_(m), n_(n)
{
    require(N >= 1 && m >= 0 && n >= 0, "canonical engine: bad shape");
}

std::shared_ptr<CanonicalEngine::Space> CanonicalEngine::space_for(const Key& key)
{
    require(static_cast<int>(key.size()) == m_ + n_, "canonical: key length mismatch");
    std::vector<int> w = key_weight(signs(), key, N_);
    std::shared_ptr<Space> s;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto& slot = spaces_[w];
        if (!slot)
            slot = std::make_shared<Space>();
        s = slot;
    }
    std::lock_guard<std::mutex> lock(s->mutex);
    if (!s->built) {
        s->keys = weight_space(N_, m_, n_, key);
        for (std::size_t r = 0; r < s->keys.size(); ++r)
            s->index[s->keys[r]] = static_cast<int>(r);
        build(*s);
        s->built = true;
    }
    return s;
}

void CanonicalEngine::build(Space& s)
{
    const int size = static_cast<int>(s.keys.size());
    s.star_cols.resize(size);
    s.psi_cols.resize(size);
    for (int b = 0; b < size; ++b) {
        TensorVec vb = TensorVec::basis(N_, signs(), s.keys[b]);
        const TensorVec star = psi_star(vb);
        const TensorVec bar = psi(vb);
        for (const auto& [k, c] : star.terms()) {
            auto it = s.index.find(k);
            ensure(it != s.index.end(), "psi*: image leaves the weight space");
            s.star_cols[b][it->second] = c;
        }
        for (const auto& [k, c] : bar.terms()) {
            auto it = s.index.find(k);
            ensure(it != s.index.end(), "psi: image leaves the weight space");
            s.psi_cols[b][it->second] = c;
        }
        // psi^*(v_B) = v_B + lower terms, psi(v_B) = v_B + higher terms
        ensure(s.star_cols[b].count(b) && s.star_cols[b][b] == Laurent(1), "psi*: diagonal coefficient is not 1");
        ensure(s.psi_cols[b].count(b) && s.psi_cols[b][b] == Laurent(1), "psi: diagonal coefficient is not 1");
        for (const auto& [c, coef] : s.star_cols[b])
            if (c != b)
                ensure(c < b && key_bruhat_leq(m_, s.keys[c], s.keys[b]),
                       "psi*: term not Bruhat-below the leading key");
        for (const auto& [c, coef] : s.psi_cols[b])
            if (c != b)
                ensure(c > b && key_bruhat_leq(m_, s.keys[b], s.keys[c]),
                       "psi: term not Bruhat-above the leading key");
    }

    // Lusztig's lemma: p_C - bar(p_C) = sum_{B != C} r_{C,B} bar(p_B), p_C in qZ[q]
    auto solve = [&](int a, const std::vector<std::map<int, Laurent>>& cols, bool downward) {
        std::map<int, Laurent> p{{a, Laurent(1)}};
        // rows of each column, transposed on the fly
        auto step = [&](int c) {
            Laurent x;
            for (const auto& [b, pb] : p) {
                if (b == c)
                    continue;
                auto it = cols[b].find(c);
                if (it != cols[b].end())
                    x += it->second * pb.bar();
            }
            if (x.is_zero())
                return;
            ensure(x.coeff(0) == 0 && x.bar() == -x, "Lusztig recursion: correction is not bar-antisymmetric");
            Laurent pc = x.positive_part();
            if (!pc.is_zero())
                p[c] = pc;
        };
        if (downward)
            for (int c = a - 1; c >= 0; --c)
                step(c);
        else
            for (int c = a + 1; c < size; ++c)
                step(c);
        TensorVec v(N_, signs());
        for (const auto& [c, pc] : p)
            v.add(s.keys[c], pc);
        return v;
    };
    for (int a = 0; a < size; ++a) {
        s.dual.emplace(a, solve(a, s.star_cols, true));
        s.canon.emplace(a, solve(a, s.psi_cols, false));
    }
}

TensorVec CanonicalEngine::dual_canonical(const Key& key)
{
    auto s = space_for(key);
    return s->dual.at(s->index.at(key));
}

TensorVec CanonicalEngine::canonical(const Key& key)
{
    auto s = space_for(key);
    return s->canon.at(s->index.at(key));
}

TensorVec CanonicalEngine::psi_star_of(const Key& key)
{
    auto s = space_for(key);
    TensorVec v(N_, signs());
    for (const auto& [c, coef] : s->star_cols[s->index.at(key)])
        v.add(s->keys[c], coef);
    return v;
}

TensorVec CanonicalEngine::psi_of(const Key& key)
{
    auto s = space_for(key);
    TensorVec v(N_, signs());
    for (const auto& [c, coef] : s->psi_cols[s->index.at(key)])
        v.add(s->keys[c], coef);
    return v;
}

} // namespace wblocks
