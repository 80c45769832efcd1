#pragma once

#include "wblocks/algebra/laurent.hpp"

#include <gmpxx.h>

#include <vector>

namespace wblocks {

// Balanced quantum integers: [n] = (q^n - q^-n)/(q - q^-1), n >= 0.
Laurent qint(int n);
// [n]! = [1][2]...[n]
Laurent qfact(int n);
// Gaussian binomial; zero when r < 0 or r > n.
Laurent qbinom(int n, int r);
// [sum k]! / prod [k_i]!
Laurent qmultinomial(const std::vector<int>& ks);

mpz_class factorial(int n);
// Ordinary binomial; zero when r < 0 or r > n.
mpz_class binomial(int n, int r);

} // namespace wblocks
