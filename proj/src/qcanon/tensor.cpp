#include "wblocks/qcanon/tensor.hpp"

#include "wblocks/error.hpp"

namespace wblocks {

TensorVec::TensorVec(int N, std::string signs) : N_(N), signs_(std::move(signs))
{
    require(N >= 1, "tensor: N must be positive");
    for (char c : signs_)
        require(c == '+' || c == '-', "tensor: signs must be '+' or '-'");
}

TensorVec TensorVec::basis(int N, std::string signs, Key key)
{
    TensorVec v(N, std::move(signs));
    v.add(key, Laurent(1));
    return v;
}

void TensorVec::check_key(const Key& k) const
{
    require(k.size() == signs_.size(), "tensor: key length does not match signs");
    for (int i : k)
        require(i >= 1 && i <= N_, "tensor: index out of range");
}

Laurent TensorVec::coeff(const Key& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Laurent() : it->second;
}

void TensorVec::add(const Key& k, const Laurent& c)
{
    check_key(k);
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TensorVec& TensorVec::operator+=(const TensorVec& o)
{
    require(o.N_ == N_ && o.signs_ == signs_, "tensor: shape mismatch");
    for (const auto& [k, c] : o.terms_)
        add(k, c);
    return *this;
}

TensorVec& TensorVec::operator-=(const TensorVec& o)
{
    require(o.N_ == N_ && o.signs_ == signs_, "tensor: shape mismatch");
    for (const auto& [k, c] : o.terms_)
        add(k, -c);
    return *this;
}

TensorVec& TensorVec::operator*=(const Laurent& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

namespace {

// (alpha_i, e_j)
int alpha_pair(int i, int j)
{
    return (i == j ? 1 : 0) - (i + 1 == j ? 1 : 0);
}

int k_exponent(int i, char sign, int j)
{
    return sign == '+' ? alpha_pair(i, j) : -alpha_pair(i, j);
}

// single-factor F_i / E_i: new index or 0
int raise_lower(Gen g, int i, char sign, int j)
{
    bool plus = sign == '+';
    if (g == Gen::F)
        return plus ? (j == i ? i + 1 : 0) : (j == i + 1 ? i : 0);
    return plus ? (j == i + 1 ? i : 0) : (j == i ? i + 1 : 0);
}

} // namespace

TensorVec act_gen(Gen g, int i, const TensorVec& v)
{
    require(i >= 1 && i < v.N(), "act_gen: generator index out of range");
    const std::string& sg = v.signs();
    const int k = v.length();
    TensorVec out(v.N(), sg);
    for (const auto& [key, c] : v.terms()) {
        if (g == Gen::K || g == Gen::Kinv) {
            int e = 0;
            for (int s = 0; s < k; ++s)
                e += k_exponent(i, sg[s], key[s]);
            out.add(key, c.shifted(g == Gen::K ? e : -e));
            continue;
        }
        for (int s = 0; s < k; ++s) {
            int j = raise_lower(g, i, sg[s], key[s]);
            if (j == 0)
                continue;
            int e = 0;
            if (g == Gen::F) {
                for (int r = s + 1; r < k; ++r)
                    e += k_exponent(i, sg[r], key[r]);
            } else {
                for (int r = 0; r < s; ++r)
                    e -= k_exponent(i, sg[r], key[r]);
            }
            Key nk = key;
            nk[s] = j;
            out.add(nk, c.shifted(e));
        }
    }
    return out;
}

Laurent pairing(const TensorVec& v, const TensorVec& w)
{
    require(v.N() == w.N() && v.signs() == w.signs(), "pairing: shape mismatch");
    Laurent s;
    const auto& small = v.terms().size() <= w.terms().size() ? v : w;
    const auto& large = v.terms().size() <= w.terms().size() ? w : v;
    for (const auto& [k, c] : small.terms()) {
        auto it = large.terms().find(k);
        if (it != large.terms().end())
            s += c * it->second;
    }
    return s;
}

std::vector<int> key_weight(const std::string& signs, const Key& key, int N)
{
    require(key.size() == signs.size(), "key_weight: length mismatch");
    std::vector<int> w(N, 0);
    for (std::size_t r = 0; r < key.size(); ++r) {
        require(key[r] >= 1 && key[r] <= N, "key_weight: index out of range");
        w[key[r] - 1] += signs[r] == '+' ? 1 : -1;
    }
    return w;
}

std::string tmn_signs(int m, int n)
{
    require(m >= 0 && n >= 0, "tmn_signs: negative size");
    return std::string(m, '+') + std::string(n, '-');
}

} // namespace wblocks
