#pragma once

#include "wblocks/algebra/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace wblocks {

// Index tuple (i_1, ..., i_k), entries in [1, N].
using Key = std::vector<int>;

/*
 * A vector in V^{sigma_1} (x) ... (x) V^{sigma_k} for quantum sl_N, where
 * signs is a string over {'+', '-'}.
 */
class TensorVec {
public:
    TensorVec(int N, std::string signs);
    static TensorVec basis(int N, std::string signs, Key key);

    int N() const { return N_; }
    const std::string& signs() const { return signs_; }
    int length() const { return static_cast<int>(signs_.size()); }
    const std::map<Key, Laurent>& terms() const { return terms_; }
    Laurent coeff(const Key& k) const;
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Laurent& c);
    TensorVec& operator+=(const TensorVec& o);
    TensorVec& operator-=(const TensorVec& o);
    TensorVec& operator*=(const Laurent& c);
    friend TensorVec operator+(TensorVec a, const TensorVec& b) { return a += b; }
    friend TensorVec operator-(TensorVec a, const TensorVec& b) { return a -= b; }
    friend TensorVec operator*(const Laurent& c, TensorVec a) { return a *= c; }
    friend bool operator==(const TensorVec& a, const TensorVec& b)
    {
        return a.N_ == b.N_ && a.signs_ == b.signs_ && a.terms_ == b.terms_;
    }

private:
    void check_key(const Key& k) const;

    int N_;
    std::string signs_;
    std::map<Key, Laurent> terms_;
};

enum class Gen { F, E, K, Kinv };

// Action of F_i, E_i, K_i^{+-1} (1 <= i < N) through the iterated comultiplication
// Delta(F) = 1 (x) F + F (x) K, Delta(E) = K^{-1} (x) E + E (x) 1, Delta(K) = K (x) K.
TensorVec act_gen(Gen g, int i, const TensorVec& v);

// Symmetric bilinear form with the standard basis orthonormal.
Laurent pairing(const TensorVec& v, const TensorVec& w);

// sum_r sigma_r e_{i_r}, as a length-N vector
std::vector<int> key_weight(const std::string& signs, const Key& key, int N);

// "+++---" style sign string for T^{m|n}
std::string tmn_signs(int m, int n);

} // namespace wblocks
