#pragma once

#include "wblocks/qcanon/tensor.hpp"

#include <vector>

namespace wblocks {

// R (or R^{-1}) on tensor slots slot, slot+1 (1-based); the two signs swap.
TensorVec r_apply(int slot, const TensorVec& v, bool inverse);

// Reduced words for the longest element of S_k. Variant 0 is s1 (s2 s1) (s3 s2 s1) ...,
// variant 1 is its image under i -> k - i.
std::vector<int> w0_word(int k, int variant = 0);
// The permutation of positions 1..k realized by a word.
std::vector<int> word_permutation(int k, const std::vector<int>& word);

// Anti-linear bar involutions of the tensor space.
TensorVec psi(const TensorVec& v, int variant = 0);
TensorVec psi_star(const TensorVec& v, int variant = 0);

// Bar the coefficients only.
TensorVec bar_coeffs(const TensorVec& v);

} // namespace wblocks
