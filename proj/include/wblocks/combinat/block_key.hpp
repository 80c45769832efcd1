#pragma once

#include "wblocks/combinat/composition.hpp"
#include "wblocks/combinat/tableau.hpp"

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace wblocks {

/*
 * Block label xi = (mu, nu; t) with ambient sizes m, n.
 * mu and nu have disjoint supports, |mu| = m - t and |nu| = n - t.
 */
struct BlockKey {
    Composition mu;
    Composition nu;
    int t = 0;
    int m = 0;
    int n = 0;

    static BlockKey make(Composition mu, Composition nu, int t);

    Composition gamma() const { return mu + nu; }
    void validate() const;

    BlockKey shifted(int s) const;
    BlockKey reflected() const;
    BlockKey swapped() const;

    friend bool operator==(const BlockKey&, const BlockKey&) = default;
    friend std::strong_ordering operator<=>(const BlockKey& a, const BlockKey& b);

    // "mu=<comp>;nu=<comp>;t=<t>" with compositions in short form "o:p0,p1"
    std::string to_string() const;
};

// Short composition form "o:p0,p1,...", "0" for the empty composition.
std::string comp_short(const Composition& c);

BlockKey block_key(const Tableau& a);
// The anti-dominant tableau with lambda_i + mu_i top entries and lambda_i + nu_i
// bottom entries equal to i.
Tableau tableau_of(const BlockKey& xi, const Composition& lambda, int s_minus = 0);
// lambda(A): the multiplicities of matched values, so that tableau_of(block_key(A), lambda(A)) ~ A.
Composition lambda_of(const Tableau& a);

// Translation/duality representative: gamma support starts at 0, and among xi and
// its mirror the one with smaller (gamma, mu, nu) dense forms.
BlockKey normalize_key(const BlockKey& xi);

struct Signature {
    int t;
    int m;
    int n;
    std::vector<int> gamma_transpose;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature invariant_signature(const BlockKey& xi);
// (s_i(mu), s_i(nu); t)
BlockKey derived_move(const BlockKey& xi, int i);
// Images of xi under the generating Morita moves: translation by +-1, duality,
// the row swap when m = n, and s_i when t = mu_i mu_{i+1} = nu_i nu_{i+1} = 0.
std::set<BlockKey> morita_moves(const BlockKey& xi);
// Normalized keys reachable from xi by Morita moves, with gamma support width at most max_width.
std::set<BlockKey> morita_closure(const BlockKey& xi, int max_width);
// Normalized keys reachable by derived moves and Morita moves within max_width.
std::set<BlockKey> derived_closure(const BlockKey& xi, int max_width);

// All block keys (mu, nu; t) for sizes m, n with supports of mu, nu inside w.
std::vector<BlockKey> block_keys_in(int m, int n, int t, Window w);

} // namespace wblocks
