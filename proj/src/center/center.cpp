#include "wblocks/center/center.hpp"

#include "wblocks/error.hpp"

#include <vector>

namespace wblocks {

MultiPoly elementary_x(int r, int m, int n)
{
    // e_r via the product prod (1 + x_k u), coefficient of u^r
    std::vector<MultiPoly> e(r + 1, MultiPoly(m, n));
    e[0] = MultiPoly::constant(m, n, 1);
    for (int k = 1; k <= m; ++k) {
        MultiPoly x = MultiPoly::variable(m, n, Var::x(k));
        for (int s = r; s >= 1; --s)
            e[s] += e[s - 1] * x;
    }
    return e[r];
}

MultiPoly complete_y(int r, int m, int n)
{
    // h_r via prod 1/(1 - y_k u)
    std::vector<MultiPoly> h(r + 1, MultiPoly(m, n));
    h[0] = MultiPoly::constant(m, n, 1);
    for (int k = 1; k <= n; ++k) {
        MultiPoly y = MultiPoly::variable(m, n, Var::y(k));
        for (int s = 1; s <= r; ++s)
            h[s] += h[s - 1] * y;
    }
    return h[r];
}

MultiPoly e_super(int r, int m, int n)
{
    require(r >= 1, "e_super: r must be positive");
    MultiPoly out(m, n);
    for (int t = 0; t <= r; ++t) {
        MultiPoly term = elementary_x(r - t, m, n) * complete_y(t, m, n);
        out += (t % 2 ? term * mpq_class(-1) : term);
    }
    return out;
}

bool is_symmetric(const MultiPoly& f)
{
    for (int i = 1; i < f.m(); ++i)
        if (!(f.swapped(Var::x(i), Var::x(i + 1)) == f))
            return false;
    for (int j = 1; j < f.n(); ++j)
        if (!(f.swapped(Var::y(j), Var::y(j + 1)) == f))
            return false;
    return true;
}

namespace {

bool pair_condition(const MultiPoly& f, int i, int j)
{
    MultiPoly g = f.partial(Var::x(i)) + f.partial(Var::y(j));
    return g.subst(Var::x(i), MultiPoly::variable(f.m(), f.n(), Var::y(j))).is_zero();
}

} // namespace

bool in_I(const MultiPoly& f, int m, int n)
{
    require(f.m() == m && f.n() == n, "in_I: variable set mismatch");
    if (!is_symmetric(f))
        return false;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (!pair_condition(f, i, j))
                return false;
    return true;
}

bool in_J(const MultiPoly& f, int m, int n, int s_minus)
{
    require(f.m() == m && f.n() == n, "in_J: variable set mismatch");
    require(s_minus >= 0 && m + s_minus <= n, "in_J: shift out of range");
    for (int i = 1; i <= m; ++i)
        if (!pair_condition(f, i, i + s_minus))
            return false;
    return true;
}

MultiPoly hc_series_coeff(int r, int m, int n)
{
    require(r >= 1, "hc_series_coeff: r must be positive");
    // power series in v = u^{-1}, truncated after v^r
    std::vector<MultiPoly> series(r + 1, MultiPoly(m, n));
    series[0] = MultiPoly::constant(m, n, 1);
    for (int k = 1; k <= m; ++k) {
        MultiPoly x = MultiPoly::variable(m, n, Var::x(k));
        for (int s = r; s >= 1; --s)
            series[s] += series[s - 1] * x;
    }
    for (int k = 1; k <= n; ++k) {
        // 1/(1 + v y) = sum (-y)^j v^j
        MultiPoly negy = MultiPoly::variable(m, n, Var::y(k)) * mpq_class(-1);
        std::vector<MultiPoly> next(r + 1, MultiPoly(m, n));
        for (int s = 0; s <= r; ++s) {
            MultiPoly p = MultiPoly::constant(m, n, 1);
            for (int j = 0; s + j <= r; ++j) {
                next[s + j] += series[s] * p;
                p = p * negy;
            }
        }
        series = std::move(next);
    }
    return series[r];
}

} // namespace wblocks
