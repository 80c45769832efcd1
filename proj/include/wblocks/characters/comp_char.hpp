#pragma once

#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/composition.hpp"

#include <gmpxx.h>

#include <map>

namespace wblocks {

// Formal character of a W-module: composition eta of m -> dim M_eta.
using CompChar = std::map<Composition, mpz_class>;

// chi^{lambda+mu} prod_i (1 + chi^{alpha_i})^{lambda_{i+1} + mu_{i+1}}
CompChar ch_verma_w(const BlockKey& xi, const Composition& lambda);
// chi^{lambda+mu} prod_i (1 + chi^{alpha_i})^{mu_{i+1}}
CompChar ch_simple_w(const BlockKey& xi, const Composition& lambda);

// Multiset {kappa : count} with c = sum count * ch_simple_w(xi, kappa).
// Throws InvalidArgument("not in block span") when no such multiset exists.
std::map<Composition, mpz_class> decompose_char(const CompChar& c, const BlockKey& xi);

mpz_class char_dimension(const CompChar& c);

} // namespace wblocks
