#include "wblocks/qcanon/rmatrix.hpp"

#include "wblocks/error.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace wblocks {

namespace {

using Image = std::vector<std::tuple<int, int, Laurent>>;

// (-q)^e
Laurent neg_q(int e)
{
    return Laurent::monomial(e, (e % 2 == 0) ? 1 : -1);
}

const Laurent& q_minus_qinv()
{
    static const Laurent v = Laurent::q(1) - Laurent::q(-1);
    return v;
}

// Image of v_i^{s1} (x) v_j^{s2} as a sum of v_{i'}^{s2} (x) v_{j'}^{s1}.
Image r_pair(bool inverse, char s1, int i, char s2, int j, int N)
{
    Image out;
    const Laurent& d = q_minus_qinv();
    if (s1 == s2) {
        bool plus = s1 == '+';
        // R on ++ has the correction when i > j; on -- when i < j. R^{-1} mirrors this.
        bool corr = (plus != inverse) ? i > j : i < j;
        if (i == j) {
            out.emplace_back(j, i, Laurent::q(inverse ? -1 : 1));
        } else {
            out.emplace_back(j, i, Laurent(1));
            if (corr)
                out.emplace_back(i, j, inverse ? -d : d);
        }
        return out;
    }
    if (i != j) {
        out.emplace_back(j, i, Laurent(1));
        return out;
    }
    bool plus_first = s1 == '+';
    out.emplace_back(j, i, Laurent::q(inverse ? 1 : -1));
    if (!inverse) {
        // +-: r = 1..i-1 downward; -+: r = 1..N-i upward
        int len = plus_first ? i - 1 : N - i;
        int dir = plus_first ? -1 : 1;
        for (int r = 1; r <= len; ++r)
            out.emplace_back(j + dir * r, i + dir * r, -(d * neg_q(-r)));
    } else {
        int len = plus_first ? N - i : i - 1;
        int dir = plus_first ? 1 : -1;
        for (int r = 1; r <= len; ++r)
            out.emplace_back(j + dir * r, i + dir * r, d * neg_q(r));
    }
    return out;
}

} // namespace

TensorVec r_apply(int slot, const TensorVec& v, bool inverse)
{
    require(slot >= 1 && slot < v.length(), "r_apply: slot out of range");
    std::string sg = v.signs();
    const char s1 = sg[slot - 1];
    const char s2 = sg[slot];
    std::swap(sg[slot - 1], sg[slot]);
    TensorVec out(v.N(), sg);
    for (const auto& [key, c] : v.terms())
        for (const auto& [a, b, coef] : r_pair(inverse, s1, key[slot - 1], s2, key[slot], v.N())) {
            Key nk = key;
            nk[slot - 1] = a;
            nk[slot] = b;
            out.add(nk, c * coef);
        }
    return out;
}

std::vector<int> w0_word(int k, int variant)
{
    std::vector<int> w;
    for (int top = 1; top < k; ++top)
        for (int s = top; s >= 1; --s)
            w.push_back(s);
    if (variant == 1)
        for (int& s : w)
            s = k - s;
    else
        require(variant == 0, "w0_word: unknown variant");
    return w;
}

std::vector<int> word_permutation(int k, const std::vector<int>& word)
{
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 1);
    // apply the rightmost letter first, as in R_{i_1} o ... o R_{i_L}
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        require(*it >= 1 && *it < k, "word_permutation: letter out of range");
        std::swap(p[*it - 1], p[*it]);
    }
    return p;
}

TensorVec bar_coeffs(const TensorVec& v)
{
    TensorVec out(v.N(), v.signs());
    for (const auto& [k, c] : v.terms())
        out.add(k, c.bar());
    return out;
}

namespace {

TensorVec bar_map(const TensorVec& v, int variant, bool star)
{
    const int k = v.length();
    const std::string& sg = v.signs();
    std::string rev(sg.rbegin(), sg.rend());
    const std::vector<int> word = w0_word(k, variant);
    TensorVec out(v.N(), sg);
    for (const auto& [key, c] : v.terms()) {
        int e = 0;
        for (int r = 0; r < k; ++r)
            for (int s = r + 1; s < k; ++s)
                if (key[r] == key[s])
                    e += (sg[r] == sg[s]) ? 1 : -1;
        Key rk(key.rbegin(), key.rend());
        TensorVec w = TensorVec::basis(v.N(), rev, rk);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            w = r_apply(*it, w, star);
        w *= c.bar().shifted(star ? e : -e);
        out += w;
    }
    return out;
}

} // namespace

TensorVec psi(const TensorVec& v, int variant)
{
    return bar_map(v, variant, false);
}

TensorVec psi_star(const TensorVec& v, int variant)
{
    return bar_map(v, variant, true);
}

} // namespace wblocks
