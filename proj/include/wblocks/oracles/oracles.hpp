#pragma once

// Slow definitional computations used to cross-check the closed formulas.

#include "wblocks/algebra/laurent.hpp"
#include "wblocks/algebra/multipoly.hpp"
#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/composition.hpp"
#include "wblocks/combinat/tableau.hpp"

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

namespace wblocks::oracle {

// max defect over all rearrangements of both rows
int atyp_brute(const Tableau& a);

// Classes of the equivalence generated by row permutations and down-up moves,
// restricted to the tableaux on p with entries in w. Returns a class id per tableau,
// in the order of tableaux_in(p, w).
std::vector<int> linkage_classes(const Pyramid& p, Window w);

// h(lambda) by enumerating every candidate rho coordinate-wise.
mpz_class h_brute(const Composition& lambda);

// d_kappa coefficients of u_lambda in S^{m|n} for sl_N, by eliminating leading
// u-monomials of the expanded d basis.
std::map<Composition, Laurent> u_in_d_solve(const Composition& lambda, const BlockKey& xi, int N);

// Random polynomial symmetric in x and in y, total degree <= max_deg. About half
// of the draws are products of supersymmetric polynomials, the rest generic.
MultiPoly random_symmetric(std::mt19937_64& rng, int m, int n, int max_deg);

} // namespace wblocks::oracle
