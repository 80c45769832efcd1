#pragma once

#include "wblocks/algebra/laurent.hpp"
#include "wblocks/combinat/composition.hpp"
#include "wblocks/qcanon/tensor.hpp"

#include <map>
#include <utility>
#include <vector>

namespace wblocks {

// A generator x_i ('x') or y_i ('y') of S.
struct SGen {
    char kind;
    int index;
    friend auto operator<=>(const SGen&, const SGen&) = default;
};
using SWord = std::vector<SGen>;

/*
 * Element of S^{m|n} in the monomial basis u_A, A anti-dominant: keys are
 * (a_1 <= ... <= a_m, b_1 >= ... >= b_n).
 */
struct SVec {
    int N = 0;
    int m = 0;
    int n = 0;
    std::map<Key, Laurent> terms;

    void add(const Key& k, const Laurent& c);
    SVec& operator+=(const SVec& o);
    SVec& operator*=(const Laurent& c);
    friend bool operator==(const SVec& a, const SVec& b)
    {
        return a.N == b.N && a.m == b.m && a.n == b.n && a.terms == b.terms;
    }
};

// u_A = q^ell u_{A°}
std::pair<int, Key> straighten(int m, const Key& key);
bool key_antidominant(int m, const Key& key);

// The word x_{a_1} ... x_{a_m} y_{b_1} ... y_{b_n}
SWord key_word(int m, const Key& key);
// Rewrite a word in the monomial basis using the defining relations.
SVec normal_form(int N, const SWord& w);
// Product of two elements given as linear combinations of words.
SVec word_product(int N, const std::vector<std::pair<SWord, Laurent>>& a, const std::vector<std::pair<SWord, Laurent>>& b);
// z_i = x_i y_i - q x_{i-1} y_{i-1} + ... + (-q)^{i-1} x_1 y_1 as words
std::vector<std::pair<SWord, Laurent>> z_words(int i);
// Evaluate a linear combination of words.
SVec eval_words(int N, int m, int n, const std::vector<std::pair<SWord, Laurent>>& ws);

// Closed-form dual canonical element d_A for anti-dominant A.
SVec d_basis(int N, int m, int n, const Key& key);
// v_A -> q^{ell(A)} u_{A°}, signs must be +^m -^n
SVec project_to_S(const TensorVec& v, int m);
// The bar involution of S defined on words by psi*(g_1...g_k) = q^E g_k...g_1.
SVec bar_S(const SVec& v);

// Coefficients of u_lambda in the d basis, by the closed formula; keys are kappa.
std::map<Composition, Laurent> expand_u_in_d(const Composition& lambda, const Composition& mu, const Composition& nu,
                                             int N);
// The anti-dominant key A(mu, nu; lambda) of T^{m|n} over [1, N].
Key block_tableau_key(const Composition& lambda, const Composition& mu, const Composition& nu);

} // namespace wblocks
