#pragma once

#include "wblocks/combinat/composition.hpp"

#include <functional>
#include <initializer_list>
#include <vector>

namespace wblocks::detail {

struct SupportRange {
    int lo;
    int hi;
};

// Smallest interval holding every support; {0,-1} when all are empty.
SupportRange support_range(std::initializer_list<const Composition*> cs);

// One admissible tau in the Cartan sum. tau[k] and beta[k] refer to index lo+k.
struct TauTerm {
    std::vector<int> tau;
    std::vector<int> beta;
    int lo;
};

// Visit every tau with max(lambda_j, rho_j) <= tau_j <= lambda_j + min(lambda_{j-1}, rho_{j-1})
// and all beta_i = lambda_{i+1} + tau_i - tau_{i+1} >= 0. Returns false if the range is empty.
bool tau_sum(const Composition& lambda, const Composition& rho, const Composition& gamma,
             const std::function<void(const TauTerm&)>& visit);

} // namespace wblocks::detail
