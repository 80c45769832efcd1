#pragma once

#include "wblocks/qcanon/tensor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace wblocks {

// ell(A) = #{i<j : a_i > a_j} + #{i<j : b_i < b_j} for a key of T^{m|n}
int key_inversions(int m, const Key& key);
// Keys of T^{m|n} covered by key in the Bruhat order.
std::vector<Key> key_lower_covers(int m, const Key& key);
// Bruhat order on keys of T^{m|n} with entries >= 1.
bool key_bruhat_leq(int m, const Key& a, const Key& b);
// All keys of T^{m|n} with entries in [1, N] and the weight of key.
std::vector<Key> weight_space(int N, int m, int n, const Key& key);

/*
 * Canonical and dual canonical bases of T^{m|n} by Lusztig's lemma.
 *
 * Work is organized per weight space; every space is computed once and kept.
 * Safe for concurrent use: one mutex guards the table of spaces and each space
 * fills itself under its own lock.
 */
class CanonicalEngine {
public:
    CanonicalEngine(int N, int m, int n);

    int N() const { return N_; }
    int m() const { return m_; }
    int n() const { return n_; }
    std::string signs() const { return tmn_signs(m_, n_); }

    TensorVec dual_canonical(const Key& key);
    TensorVec canonical(const Key& key);
    // psi^*(v_key) and psi(v_key), memoized
    TensorVec psi_star_of(const Key& key);
    TensorVec psi_of(const Key& key);

private:
    struct Space;
    std::shared_ptr<Space> space_for(const Key& key);
    void build(Space& s);

    int N_;
    int m_;
    int n_;
    std::mutex mutex_;
    std::map<std::vector<int>, std::shared_ptr<Space>> spaces_;
};

} // namespace wblocks
