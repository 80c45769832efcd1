#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/bruhat.hpp"
#include "wblocks/combinat/composition.hpp"
#include "wblocks/combinat/tableau.hpp"
#include "wblocks/error.hpp"
#include "wblocks/oracles/oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace wblocks;

namespace {

Tableau tab(std::vector<int> top, std::vector<int> bot, int s = 0)
{
    Pyramid p(static_cast<int>(top.size()), static_cast<int>(bot.size()), s);
    return Tableau(p, std::move(top), std::move(bot));
}

} // namespace

TEST_CASE("pyramid column offsets")
{
    Pyramid p(2, 5, 2);
    CHECK(p.deg_entry(1, 2) == 1);
    CHECK(p.deg_entry(3, 3) == 0);
    CHECK(p.deg_entry(1, 3) == -2);
    CHECK(p.s_plus() == 1);
}

TEST_CASE("defect and atypicality")
{
    CHECK(defect(tab({5}, {5})) == 1);
    CHECK(atyp(tab({5}, {5})) == 1);
    Tableau a = tab({3, 1}, {1, 3});
    CHECK(defect(a) == 0);
    CHECK(atyp(a) == 2);
    CHECK(atyp(tab({4, 3}, {1, 2})) == 0);
    for (const Tableau& b : tableaux_in(Pyramid(2, 3, 1), {0, 2}))
        CHECK(atyp(b) == oracle::atyp_brute(b));
}

TEST_CASE("dominance of tableaux")
{
    CHECK(is_antidominant(tab({1, 1, 2}, {3, 2, 2})));
    CHECK(is_dominant(tab({2, 1}, {1, 2})));
    CHECK_FALSE(is_dominant(tab({1, 2}, {1, 2})));
    CHECK_FALSE(is_antidominant(tab({1, 2}, {1, 2})));
    Tableau r = antidominant_rep(tab({3, 1, 2}, {1, 4, 2}));
    CHECK(r == tab({1, 2, 3}, {4, 2, 1}));
    CHECK(row_equivalent(r, tab({3, 1, 2}, {1, 4, 2})));
}

TEST_CASE("down-up moves")
{
    CHECK(down_up(tab({3, 1}, {2, 4})).size() == 1);
    auto du = down_up(tab({5}, {5}));
    REQUIRE(du.size() == 2);
    CHECK(std::count(du.begin(), du.end(), tab({5}, {5})) == 1);
    CHECK(std::count(du.begin(), du.end(), tab({4}, {4})) == 1);
    CHECK(down_up(tab({3, 3}, {3, 3})).size() == 4);
}

TEST_CASE("Bruhat order")
{
    Window w{0, 6};
    Tableau a = tab({1, 2}, {3, 4});
    CHECK(bruhat_leq(a, a, w));
    CHECK(bruhat_leq(tab({1, 2}, {3, 4}), tab({2, 1}, {3, 4}), w));
    CHECK_FALSE(bruhat_leq(tab({2, 1}, {3, 4}), tab({1, 2}, {3, 4}), w));
    CHECK(bruhat_leq(tab({4}, {4}), tab({5}, {5}), w));
    CHECK_FALSE(bruhat_leq(tab({5}, {5}), tab({4}, {4}), w));
    CHECK_THROWS_AS(bruhat_leq(tab({9}, {9}), tab({5}, {5}), w), WindowError);
}

TEST_CASE("block keys")
{
    BlockKey xi = block_key(tab({5}, {5}));
    CHECK(xi == BlockKey::make({}, {}, 1));
    CHECK(tableau_of(xi, Composition::unit(5)) == tab({5}, {5}));
    CHECK(block_key(tab({5}, {3})) == BlockKey::make(Composition::unit(5), Composition::unit(3), 0));

    for (const Tableau& a : tableaux_in(Pyramid(2, 3, 0), {1, 3})) {
        if (!is_antidominant(a))
            continue;
        CHECK(tableau_of(block_key(a), lambda_of(a)) == a);
    }
}

TEST_CASE("weights and linkage")
{
    CHECK(weight_of(tab({5}, {5})).empty());
    CHECK(weight_of(tab({5}, {3})) == std::map<int, int>{{3, -1}, {5, 1}});

    Pyramid p(2, 2, 0);
    Window w{1, 4};
    auto all = tableaux_in(p, w);
    for (const auto& a : all)
        for (const auto& b : all)
            CHECK((weight_of(a) == weight_of(b)) == (block_key(a) == block_key(b)));

    // blocks agree with the closure of row permutations and down-up moves, away
    // from the window edge where the closure is cut off
    auto cls = oracle::linkage_classes(p, {0, 4});
    auto big = tableaux_in(p, {0, 4});
    for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = 0; j < big.size(); ++j) {
            if (big[i].min_entry() < 1 || big[j].min_entry() < 1)
                continue;
            if (atyp(big[i]) > 0 || atyp(big[j]) > 0)
                continue;
            CHECK((cls[i] == cls[j]) == (block_key(big[i]) == block_key(big[j])));
        }
}

TEST_CASE("composition transpose and duality")
{
    Composition l = Composition::from_dense(0, {0, 2, 4, 0, 0, 1});
    CHECK(comp_strictify(l) == std::vector<int>{2, 4, 1});
    CHECK(comp_transpose(l) == std::vector<int>{3, 2, 1, 1});
    CHECK(comp_equal_tdual(l, l.reflected()));
    CHECK(comp_equal_tdual(Composition::from_dense(0, {2, 4, 1}), Composition::from_dense(7, {1, 4, 2})));
    CHECK_FALSE(comp_equal_tdual(Composition::from_dense(0, {2, 4, 1}), Composition::from_dense(0, {4, 2, 1})));
    CHECK(comp_normalize(Composition::from_dense(5, {1, 4, 2})) == Composition::from_dense(0, {1, 4, 2}));
    CHECK(comp_normalize(Composition::from_dense(5, {2, 4, 1})) == Composition::from_dense(0, {1, 4, 2}));
}

TEST_CASE("compositions in a window")
{
    CHECK(compositions_in(2, {0, 2}).size() == 6);
    CHECK(compositions_in(0, {0, 2}).size() == 1);
    CHECK(add_alpha(Composition::unit(2), 1) == Composition::unit(1));
    CHECK(dominance_leq(Composition::unit(2), Composition::unit(1)));
}

TEST_CASE("derived and Morita moves")
{
    BlockKey xi = BlockKey::make(Composition::from_dense(0, {2, 0, 1}), Composition::from_dense(1, {1}), 1);
    BlockKey d = derived_move(xi, 0);
    CHECK(d.mu == Composition::from_dense(0, {0, 2, 1}));
    CHECK(d.nu == Composition::from_dense(0, {1}));
    CHECK(invariant_signature(d) == invariant_signature(xi));

    BlockKey typ = BlockKey::make(Composition::from_dense(0, {1}), Composition::from_dense(2, {1}), 0);
    BlockKey far = BlockKey::make(Composition::from_dense(4, {1}), Composition::from_dense(6, {1}), 0);
    CHECK(morita_closure(typ, 4).count(normalize_key(far)) == 1);
    CHECK(morita_moves(typ).count(typ.shifted(1)) == 1);
}
