#include "wblocks/center/center.hpp"
#include "wblocks/oracles/oracles.hpp"

#include <doctest.h>

using namespace wblocks;

namespace {

MultiPoly xv(int m, int n, int i)
{
    return MultiPoly::variable(m, n, Var::x(i));
}
MultiPoly yv(int m, int n, int j)
{
    return MultiPoly::variable(m, n, Var::y(j));
}

} // namespace

TEST_CASE("supersymmetric elementary polynomials")
{
    CHECK(e_super(1, 2, 2) == xv(2, 2, 1) + xv(2, 2, 2) - yv(2, 2, 1) - yv(2, 2, 2));
    MultiPoly x = xv(1, 1, 1);
    MultiPoly y = yv(1, 1, 1);
    CHECK(e_super(2, 1, 1) == y * y - x * y);
    for (int r = 1; r <= 4; ++r) {
        MultiPoly h = complete_y(r, 0, 3);
        if (r % 2)
            h *= mpq_class(-1);
        CHECK(e_super(r, 0, 3) == h);
    }
}

TEST_CASE("membership in I")
{
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            CHECK(in_I(MultiPoly::constant(m, n, 5), m, n));
            for (int r = 1; r <= 5; ++r) {
                CHECK(in_I(e_super(r, m, n), m, n));
                CHECK(is_symmetric(e_super(r, m, n)));
            }
        }
    CHECK_FALSE(in_I(xv(1, 1, 1), 1, 1));
    CHECK_FALSE(in_I(xv(2, 1, 1) * xv(2, 1, 1) + xv(2, 1, 2) * xv(2, 1, 2), 2, 1));
}

TEST_CASE("generating series coefficients")
{
    CHECK(hc_series_coeff(1, 2, 1) == e_super(1, 2, 1));
    CHECK(hc_series_coeff(2, 1, 1) == yv(1, 1, 1) * yv(1, 1, 1) - xv(1, 1, 1) * yv(1, 1, 1));
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n)
            for (int r = 1; r <= 5; ++r)
                CHECK(hc_series_coeff(r, m, n) == e_super(r, m, n));
}

TEST_CASE("I and J agree on random symmetric polynomials")
{
    std::mt19937_64 rng(7);
    int in_count = 0;
    for (int k = 0; k < 40; ++k) {
        int m = 1 + k % 2;
        int n = m + k % 3;
        MultiPoly f = oracle::random_symmetric(rng, m, n, 3);
        bool i = in_I(f, m, n);
        in_count += i;
        for (int s = 0; s <= n - m; ++s)
            CHECK(in_J(f, m, n, s) == i);
    }
    CHECK(in_count > 0);
    CHECK(in_count < 40);
}
