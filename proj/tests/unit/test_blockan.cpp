#include "wblocks/blockan/cartan.hpp"
#include "wblocks/blockan/recover.hpp"
#include "wblocks/combinat/block_key.hpp"
#include "wblocks/error.hpp"
#include "wblocks/oracles/oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace wblocks;

namespace {

Composition dense(int o, std::vector<int> p)
{
    return Composition::from_dense(o, p);
}

} // namespace

TEST_CASE("Verma multiplicities")
{
    BlockKey xi = BlockKey::make({}, {}, 1);
    CHECK(verma_mult(xi, Composition::unit(3), Composition::unit(3)) == 1);
    CHECK(verma_mult(xi, Composition::unit(3), Composition::unit(2)) == 1);
    CHECK(verma_mult(xi, Composition::unit(3), Composition::unit(4)) == 0);
    BlockKey x2 = BlockKey::make({}, {}, 2);
    CHECK(verma_mult(x2, Composition::unit(3, 2), dense(2, {1, 1})) == 2);
}

TEST_CASE("Cartan entries")
{
    // typical blocks are simple up to the multiplicity m! n! / prod gamma_i!
    BlockKey typ = BlockKey::make(dense(0, {1}), dense(1, {1}), 0);
    CHECK(cartan_entry(typ, {}, {}) == 1);
    BlockKey typ2 = BlockKey::make(dense(0, {2}), dense(1, {1, 1}), 0);
    CHECK(cartan_entry(typ2, {}, {}) == cartan_oracle(typ2, {}, {}));

    BlockKey xi = BlockKey::make({}, {}, 1);
    CHECK(cartan_entry(xi, Composition::unit(4), Composition::unit(4)) == 2);
    CHECK(cartan_entry(xi, Composition::unit(4), Composition::unit(5)) == 1);
    CHECK(cartan_entry(xi, Composition::unit(4), Composition::unit(6)) == 0);

    for (const BlockKey& k : block_keys_in(2, 2, 1, {0, 1}))
        for (const Composition& l : compositions_in(k.t, {-1, 2}))
            for (const Composition& c : compositions_in(k.t, {-1, 2}))
                CHECK(cartan_entry(k, l, c) == cartan_oracle(k, l, c));
}

TEST_CASE("graded Cartan entries")
{
    BlockKey xi = BlockKey::make({}, {}, 1);
    CHECK(graded_cartan(xi, Composition::unit(2), Composition::unit(2)) == 1 + Laurent::q(2));
    for (const BlockKey& k : block_keys_in(2, 3, 1, {0, 1})) {
        int d = k.m * k.m + k.n * k.n;
        const Composition gamma = k.gamma();
        for (const auto& [i, g] : gamma.parts())
            d -= g * g;
        for (const Composition& l : compositions_in(k.t, {-1, 2})) {
            CHECK(graded_cartan(k, l, l).max_degree() == d);
            for (const Composition& c : compositions_in(k.t, {-1, 2}))
                CHECK(graded_cartan(k, l, c).eval1() == cartan_entry(k, l, c));
        }
    }
}

TEST_CASE("composition factor counts")
{
    CHECK(h_count(Composition::unit(0)) == 3);
    CHECK(h_count(Composition::unit(4, 2)) == 6);
    for (int t = 0; t <= 4; ++t)
        CHECK(h_count(Composition::unit(1, t)) == (t + 2) * (t + 1) / 2);
    Composition gap = dense(0, {1, 2, 0, 1});
    CHECK(h_count(gap) == h_count(dense(0, {1, 2})) * h_count(dense(3, {1})));
    for (const Composition& l : compositions_in(3, {0, 2}))
        CHECK(h_count(l) == oracle::h_brute(l));
}

TEST_CASE("End-dimensions")
{
    BlockKey xi = BlockKey::make({}, {}, 1);
    CHECK(end_dim(xi, 7) == 2);
    for (const BlockKey& k : block_keys_in(2, 3, 1, {0, 1}))
        for (int i = -2; i <= 3; ++i) {
            Composition te = Composition::unit(i, k.t);
            CHECK(end_dim(k, i) == cartan_entry(k, te, te));
            if (k.gamma()[i] == 0 && k.gamma()[i + 1] == 0)
                CHECK(end_dim(k, i) == end_dim_stable(k));
        }
}

TEST_CASE("neighbor test")
{
    BlockKey xi = BlockKey::make(dense(0, {1}), {}, 1);
    CHECK(neighbor_test(xi, 2, 2));
    CHECK(neighbor_test(xi, 2, 3));
    CHECK(neighbor_test(xi, 3, 2));
    CHECK_FALSE(neighbor_test(xi, 2, 4));
}

TEST_CASE("Cartan windows")
{
    BlockKey xi = BlockKey::make({}, {}, 1);
    auto w = cartan_window(xi, {-2, 2}, 2);
    REQUIRE(w.labels.size() == 5);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 5; ++c) {
            int d = std::abs(static_cast<int>(r) - static_cast<int>(c));
            CHECK(w.entries[r][c] == (d == 0 ? 2 : d == 1 ? 1 : 0));
        }
    auto g = graded_cartan_window(xi, {-2, 2}, 1);
    CHECK(g.entries[1][1] == 1 + Laurent::q(2));
}

TEST_CASE("recovering t and gamma")
{
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 3; ++n)
            for (int t = 1; t <= std::min(m, n); ++t)
                for (const BlockKey& k : block_keys_in(m, n, t, {0, 1})) {
                    FormulaOracle data(k, {-3, 4});
                    RecoveredInvariants r = recover_invariants(data);
                    CHECK(r.t == k.t);
                    CHECK(r.gamma == comp_normalize(k.gamma()));

                    std::vector<int> perm(data.size());
                    std::iota(perm.begin(), perm.end(), 0);
                    std::reverse(perm.begin(), perm.end());
                    RelabeledOracle shuffled(data, perm);
                    CHECK(recover_invariants(shuffled).gamma == r.gamma);

                    FormulaOracle mirror(k.reflected(), {-4, 3});
                    CHECK(recover_invariants(mirror).gamma == r.gamma);
                }
}

TEST_CASE("recovery needs a wide enough window")
{
    BlockKey k = BlockKey::make(dense(0, {1, 1}), {}, 1);
    CHECK_THROWS_AS(recover_invariants(FormulaOracle(k, {0, 1})), WindowError);
}
