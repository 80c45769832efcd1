#include "wblocks/algebra/multipoly.hpp"

#include "wblocks/error.hpp"

#include <sstream>
#include <utility>

namespace wblocks {

int MultiPoly::slot(Var v) const
{
    if (v.kind == Var::Kind::X) {
        require(v.index >= 1 && v.index <= m_, "variable x index out of range");
        return v.index - 1;
    }
    require(v.index >= 1 && v.index <= n_, "variable y index out of range");
    return m_ + v.index - 1;
}

MultiPoly MultiPoly::constant(int m, int n, const mpq_class& c)
{
    MultiPoly p(m, n);
    p.add_term(Exponent(m + n, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int m, int n, Var v)
{
    MultiPoly p(m, n);
    Exponent e(m + n, 0);
    e[p.slot(v)] = 1;
    p.add_term(e, 1);
    return p;
}

int MultiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e)
            s += k;
        d = std::max(d, s);
    }
    return d;
}

mpq_class MultiPoly::coeff(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const mpq_class& c)
{
    require(static_cast<int>(e.size()) == m_ + n_, "exponent length mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::partial(Var v) const
{
    int s = slot(v);
    MultiPoly r(m_, n_);
    for (const auto& [e, c] : terms_) {
        if (e[s] == 0)
            continue;
        Exponent f = e;
        f[s] -= 1;
        r.add_term(f, c * e[s]);
    }
    return r;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& g) const
{
    require(g.m_ == m_ && g.n_ == n_, "subst: ring mismatch");
    int s = slot(v);
    std::vector<MultiPoly> powers{constant(m_, n_, 1)};
    MultiPoly r(m_, n_);
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[s])
            powers.push_back(powers.back() * g);
        Exponent rest = e;
        rest[s] = 0;
        MultiPoly mono(m_, n_);
        mono.add_term(rest, c);
        r += mono * powers[e[s]];
    }
    return r;
}

MultiPoly MultiPoly::swapped(Var a, Var b) const
{
    int sa = slot(a);
    int sb = slot(b);
    MultiPoly r(m_, n_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        std::swap(f[sa], f[sb]);
        r.add_term(f, c);
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    require(o.m_ == m_ && o.n_ == n_, "ring mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    require(o.m_ == m_ && o.n_ == n_, "ring mismatch");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const mpq_class& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    require(a.m_ == b.m_ && a.n_ == b.n_, "ring mismatch");
    MultiPoly r(a.m_, a.n_);
    MultiPoly::Exponent e(a.m_ + a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    return r;
}

std::string MultiPoly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.get_str() << ")";
        for (int k = 0; k < m_ + n_; ++k) {
            if (e[k] == 0)
                continue;
            os << "*" << (k < m_ ? "x" : "y") << (k < m_ ? k + 1 : k - m_ + 1);
            if (e[k] != 1)
                os << "^" << e[k];
        }
    }
    return os.str();
}

} // namespace wblocks
