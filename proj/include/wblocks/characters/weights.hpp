#pragma once

#include "wblocks/combinat/tableau.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace wblocks {

/*
 * Weights of gl(m|n) are stored by their pairings (lambda, delta_j), j = 1..m+n,
 * under the supertrace form, so that box entries read off directly. Indices
 * j > m are odd.
 */
using WeightVec = std::vector<int>;

// A total order on boxes 1..m+n, listed from smallest to largest.
using BoxOrder = std::vector<int>;

BoxOrder natural_order(const Pyramid& p);
// i <' j iff col(i) < col(j), or equal columns and row(i) < row(j)
BoxOrder column_order(const Pyramid& p);
// 1 < ... < m and m+1 < ... < m+n inside the order
bool is_normal_order(const Pyramid& p, const BoxOrder& order);

WeightVec rho_order(const Pyramid& p, const BoxOrder& order);
// entries of a minus rho
WeightVec tableau_weight(const Pyramid& p, const BoxOrder& order, const Tableau& a);
// 0 or 1
int parity_of(const Pyramid& p, const WeightVec& w);

struct WeightChar {
    int depth = 0;
    std::map<WeightVec, mpz_class> terms;
};

// Verma character for the order, expanded up to height depth. Height is the
// sum of simple-root coefficients of (lambda^<_A - weight), measured from the
// natural-order highest weight for every order.
WeightChar verma_char_trunc(const Pyramid& p, const BoxOrder& order, const Tableau& a, int depth);

// e_r of the top row, r = 0..m, and e_s of the bottom row, s = 0..n
struct HwScalars {
    std::vector<mpz_class> top;
    std::vector<mpz_class> bottom;
};
HwScalars hw_scalars(const Tableau& a);

} // namespace wblocks
