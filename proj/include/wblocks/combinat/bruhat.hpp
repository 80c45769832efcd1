#pragma once

#include "wblocks/combinat/composition.hpp"
#include "wblocks/combinat/tableau.hpp"

#include <vector>

namespace wblocks {

// Tableaux covered by a under the three Bruhat cover moves.
std::vector<Tableau> bruhat_lower_covers(const Tableau& a);

// a <= b in the Bruhat order, searched downward from b. Entries of a and b must
// lie in w, otherwise WindowError.
bool bruhat_leq(const Tableau& a, const Tableau& b, Window w);

// All tableaux on p with entries in w.
std::vector<Tableau> tableaux_in(const Pyramid& p, Window w);

} // namespace wblocks
