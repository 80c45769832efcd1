#include "wblocks/algebra/laurent.hpp"
#include "wblocks/algebra/multipoly.hpp"
#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/error.hpp"

#include <doctest.h>

using namespace wblocks;

TEST_CASE("Laurent arithmetic")
{
    Laurent q = Laurent::q();
    CHECK(q.bar() == Laurent::q(-1));
    Laurent f = 3 + q * q - Laurent::q(-5) * mpz_class(7);
    CHECK(f.bar().bar() == f);
    CHECK((1 + q * q).eval1() == 2);
    CHECK(pow(1 + q, 3) == 1 + Laurent(3) * q + Laurent(3) * q * q + q * q * q);
    CHECK((q - q).is_zero());
    CHECK(f.min_degree() == -5);
    CHECK(f.max_degree() == 2);
    CHECK(f.positive_part() == q * q);
}

TEST_CASE("exact division")
{
    Laurent a = 1 + Laurent::q(2);
    Laurent b = Laurent::q(-1) - Laurent::q(3);
    CHECK(exact_div(a * b, a) == b);
    CHECK(exact_div(a * b, b) == a);
    CHECK_THROWS_AS(exact_div(a, 1 + Laurent::q()), InternalError);
}

TEST_CASE("quantum numbers")
{
    Laurent q = Laurent::q();
    CHECK(qint(2) == q + q.bar());
    CHECK(qint(1) == 1);
    CHECK(qint(0).is_zero());
    CHECK(qbinom(2, 1) == q + q.bar());
    CHECK(qbinom(4, 2) == Laurent::q(4) + Laurent::q(2) + 2 + Laurent::q(-2) + Laurent::q(-4));
    CHECK(qbinom(3, 5).is_zero());
    CHECK(qmultinomial({2, 2}) == qbinom(4, 2));
    for (int n = 0; n <= 7; ++n)
        for (int r = 0; r <= n; ++r) {
            CHECK(qbinom(n, r).eval1() == binomial(n, r));
            CHECK(qbinom(n, r).bar() == qbinom(n, r));
        }
    CHECK(factorial(5) == 120);
}

TEST_CASE("polynomials in x and y")
{
    const int m = 1;
    const int n = 1;
    MultiPoly x1 = MultiPoly::variable(m, n, Var::x(1));
    MultiPoly y1 = MultiPoly::variable(m, n, Var::y(1));
    CHECK((x1 * y1).partial(Var::x(1)) == y1);
    CHECK((x1 - y1).subst(Var::x(1), y1).is_zero());
    CHECK((x1 * x1).partial(Var::y(1)).is_zero());
    CHECK((x1 * x1 * y1).total_degree() == 3);
    CHECK((x1 * y1 * y1).swapped(Var::x(1), Var::y(1)) == x1 * x1 * y1);
    CHECK(MultiPoly::constant(m, n, mpq_class(1, 2)).coeff({0, 0}) == mpq_class(1, 2));
}
