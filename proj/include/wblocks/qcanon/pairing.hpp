#pragma once

#include "wblocks/algebra/laurent.hpp"
#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/composition.hpp"

namespace wblocks {

// (b_kappa, b_lambda) in T^{m|n} for sl_N by the closed tau-sum. All supports in [1, N].
Laurent pairing_formula(const BlockKey& xi, const Composition& kappa, const Composition& lambda, int N);

} // namespace wblocks
