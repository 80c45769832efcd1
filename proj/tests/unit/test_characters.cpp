#include "wblocks/blockan/cartan.hpp"
#include "wblocks/characters/comp_char.hpp"
#include "wblocks/characters/weights.hpp"
#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/bruhat.hpp"

#include <doctest.h>

using namespace wblocks;

TEST_CASE("rho for the natural order")
{
    Pyramid p0(0, 3, 0);
    CHECK(rho_order(p0, natural_order(p0)) == WeightVec{1, 2, 3});
    Pyramid p(1, 1, 0);
    CHECK(rho_order(p, natural_order(p)) == WeightVec{0, 0});
}

TEST_CASE("box entries and parity")
{
    Pyramid p(2, 3, 1);
    for (const BoxOrder& o : {natural_order(p), column_order(p)}) {
        REQUIRE(is_normal_order(p, o));
        WeightVec rho = rho_order(p, o);
        for (const Tableau& a : tableaux_in(p, {0, 2})) {
            WeightVec w = tableau_weight(p, o, a);
            for (int j = 1; j <= p.size(); ++j)
                CHECK(w[j - 1] + rho[j - 1] == a.entry(j));
        }
    }
    for (int s = 0; s <= 2; ++s) {
        Pyramid p2(1, 3, s);
        BoxOrder o = column_order(p2);
        for (const Tableau& a : tableaux_in(p2, {0, 1})) {
            WeightVec w = tableau_weight(p2, o, a);
            int b = 0;
            for (int v : a.bottom())
                b += v;
            CHECK(parity_of(p2, w) == b % 2);
            WeightVec w2 = w;
            w2[p2.m()] += 1;
            CHECK(parity_of(p2, w2) != parity_of(p2, w));
        }
    }
}

TEST_CASE("truncated Verma characters")
{
    Pyramid p(1, 1, 0);
    Tableau a(p, {2}, {3});
    BoxOrder o = natural_order(p);
    WeightChar c0 = verma_char_trunc(p, o, a, 0);
    REQUIRE(c0.terms.size() == 1);
    CHECK(c0.terms.begin()->first == tableau_weight(p, o, a));
    WeightChar c1 = verma_char_trunc(p, o, a, 1);
    CHECK(c1.terms.size() == 2);
    for (const auto& [w, mult] : c1.terms)
        CHECK(mult == 1);

    Pyramid p2(2, 2, 0);
    for (const Tableau& b : tableaux_in(p2, {1, 2})) {
        auto x = verma_char_trunc(p2, natural_order(p2), b, 3);
        auto y = verma_char_trunc(p2, column_order(p2), b, 3);
        CHECK(x.terms == y.terms);
    }
}

TEST_CASE("highest weight scalars")
{
    Pyramid p(2, 2, 0);
    HwScalars s = hw_scalars(Tableau(p, {1, 2}, {4, 4}));
    CHECK(s.top[1] == 3);
    CHECK(s.top[2] == 2);
    CHECK(hw_scalars(Tableau(p, {2, 1}, {4, 4})).top == s.top);
    Pyramid q(1, 1, 0);
    CHECK(hw_scalars(Tableau(q, {5}, {5})).bottom[1] == 5);
}

TEST_CASE("W-side characters")
{
    BlockKey xi = BlockKey::make({}, {}, 1);
    Composition e2 = Composition::unit(2);
    CompChar v = ch_verma_w(xi, e2);
    CHECK(v == CompChar{{Composition::unit(1), 1}, {e2, 1}});
    CHECK(ch_simple_w(xi, e2) == CompChar{{e2, 1}});

    for (const BlockKey& k : block_keys_in(2, 3, 1, {0, 2}))
        for (const Composition& l : compositions_in(k.t, {0, 2})) {
            CHECK(char_dimension(ch_verma_w(k, l)) == mpz_class(1) << k.m);
            CHECK(char_dimension(ch_simple_w(k, l)) == mpz_class(1) << (k.m - k.t));
            CHECK(decompose_char(ch_simple_w(k, l), k) == std::map<Composition, mpz_class>{{l, 1}});
            for (const auto& [kappa, mult] : decompose_char(ch_verma_w(k, l), k))
                CHECK(mult == verma_mult(k, l, kappa));
        }
}
