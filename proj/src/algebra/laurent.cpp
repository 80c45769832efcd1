#include "wblocks/algebra/laurent.hpp"

#include "wblocks/error.hpp"

#include <sstream>

namespace wblocks {

Laurent::Laurent(long c)
{
    if (c != 0)
        terms_.emplace(0, mpz_class(c));
}

Laurent::Laurent(const mpz_class& c)
{
    if (c != 0)
        terms_.emplace(0, c);
}

Laurent Laurent::monomial(int exp, const mpz_class& c)
{
    Laurent r;
    r.add_term(exp, c);
    return r;
}

int Laurent::min_degree() const
{
    require(!is_zero(), "min_degree of zero Laurent polynomial");
    return terms_.begin()->first;
}

int Laurent::max_degree() const
{
    require(!is_zero(), "max_degree of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

mpz_class Laurent::coeff(int exp) const
{
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void Laurent::add_term(int exp, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Laurent Laurent::bar() const
{
    Laurent r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

mpz_class Laurent::eval1() const
{
    mpz_class s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

Laurent Laurent::shifted(int k) const
{
    Laurent r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

Laurent Laurent::positive_part() const
{
    Laurent r;
    for (auto it = terms_.upper_bound(0); it != terms_.end(); ++it)
        r.terms_.emplace_hint(r.terms_.end(), it->first, it->second);
    return r;
}

bool Laurent::nonnegative() const
{
    for (const auto& [e, c] : terms_)
        if (c < 0)
            return false;
    return true;
}

Laurent& Laurent::operator+=(const Laurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b)
{
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o)
{
    *this = *this * o;
    return *this;
}

Laurent& Laurent::operator*=(const mpz_class& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Laurent Laurent::operator-() const
{
    Laurent r = *this;
    for (auto& [e, v] : r.terms_)
        v = -v;
    return r;
}

std::string Laurent::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        mpz_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1)
            os << a.get_str() << "*";
        os << "q";
        if (e != 1)
            os << "^" << e;
    }
    return os.str();
}

Laurent pow(const Laurent& x, unsigned e)
{
    Laurent r(1);
    Laurent b = x;
    while (e) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

Laurent exact_div(const Laurent& num, const Laurent& den)
{
    require(!den.is_zero(), "division by zero Laurent polynomial");
    if (num.is_zero())
        return Laurent();
    const int dtop = den.max_degree();
    const mpz_class& lc = den.terms().rbegin()->second;
    const int qmin = num.min_degree() - den.min_degree();
    Laurent quo;
    Laurent rem = num;
    while (!rem.is_zero()) {
        int e = rem.max_degree() - dtop;
        const mpz_class& c = rem.terms().rbegin()->second;
        if (e < qmin || !mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()))
            throw InternalError("inexact Laurent division: " + num.to_string() + " / " + den.to_string());
        mpz_class t = c / lc;
        quo.add_term(e, t);
        rem -= den.shifted(e) * t;
    }
    return quo;
}

} // namespace wblocks
