#pragma once

#include "wblocks/algebra/laurent.hpp"
#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/composition.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace wblocks {

// [M(lambda) : L(kappa)]: prod binom(lambda_{i+1}, theta_i) when
// kappa = lambda + sum theta_i alpha_i with 0 <= theta_i <= lambda_{i+1}, else 0.
mpz_class verma_mult(const BlockKey& xi, const Composition& lambda, const Composition& kappa);

// The composition rho with kappa_i = lambda_{i+1} + rho_i - rho_{i+1}, if it satisfies
// 0 <= rho_{i+1} <= lambda_{i+1} + min(lambda_i, rho_i) everywhere.
std::optional<Composition> cartan_rho(const Composition& lambda, const Composition& kappa);

// Closed formula for [P(lambda) : L(kappa)].
mpz_class cartan_entry(const BlockKey& xi, const Composition& lambda, const Composition& kappa);
// Same number via BGG reciprocity over Verma multiplicities.
mpz_class cartan_oracle(const BlockKey& xi, const Composition& lambda, const Composition& kappa);
// Graded dimension of 1_kappa B 1_lambda.
Laurent graded_cartan(const BlockKey& xi, const Composition& lambda, const Composition& kappa);

// Number of compositions rho with 0 <= rho_{i+1} <= lambda_{i+1} + min(lambda_i, rho_i).
mpz_class h_count(const Composition& lambda);

// dim End(P(t e_i))
mpz_class end_dim(const BlockKey& xi, int i);
// binom(2t,t) * end_dim / N with N the value away from the support of gamma
mpq_class d_invariant(const BlockKey& xi, int i);
// The stable value N = m! n! binom(2t,t) / (t!^2 prod gamma_j!)
mpq_class end_dim_stable(const BlockKey& xi);
bool neighbor_test(const BlockKey& xi, int i, int j);

template <class Entry>
struct CartanWindow {
    BlockKey block;
    std::vector<Composition> labels;
    // entries[r][c] = [P(labels[r]) : L(labels[c])]
    std::vector<std::vector<Entry>> entries;
};

// Both windows are assembled in parallel over rows with `threads` workers
// (0 = hardware concurrency); the result does not depend on the thread count.
CartanWindow<mpz_class> cartan_window(const BlockKey& xi, Window w, unsigned threads = 0);
CartanWindow<Laurent> graded_cartan_window(const BlockKey& xi, Window w, unsigned threads = 0);

} // namespace wblocks
