#pragma once

#include "wblocks/combinat/block_key.hpp"
#include "wblocks/combinat/composition.hpp"

#include <gmpxx.h>

#include <vector>

namespace wblocks {

/*
 * Dimension data for the simples of one block, labeled 0..size()-1 with no
 * further meaning. The labels should cover a window wide enough that the
 * End-dimension settles to its stable value at both ends.
 */
class BlockOracle {
public:
    virtual ~BlockOracle() = default;
    virtual int size() const = 0;
    // number of simples with nonzero [P(x) : L(y)]
    virtual mpz_class h(int x) const = 0;
    virtual bool adjacent(int x, int y) const = 0;
    virtual mpz_class end_dim(int x) const = 0;
};

// Oracle answering from the closed formulas for a known block, labels = compositions of t in w.
class FormulaOracle : public BlockOracle {
public:
    FormulaOracle(BlockKey xi, Window w);
    int size() const override { return static_cast<int>(labels_.size()); }
    mpz_class h(int x) const override;
    bool adjacent(int x, int y) const override;
    mpz_class end_dim(int x) const override;
    const std::vector<Composition>& labels() const { return labels_; }

private:
    BlockKey xi_;
    std::vector<Composition> labels_;
};

// Oracle over explicit data: a square Cartan matrix and the h values.
class MatrixOracle : public BlockOracle {
public:
    MatrixOracle(std::vector<std::vector<mpz_class>> matrix, std::vector<mpz_class> h);
    int size() const override { return static_cast<int>(matrix_.size()); }
    mpz_class h(int x) const override { return h_.at(x); }
    bool adjacent(int x, int y) const override { return matrix_.at(x).at(y) != 0; }
    mpz_class end_dim(int x) const override { return matrix_.at(x).at(x); }

private:
    std::vector<std::vector<mpz_class>> matrix_;
    std::vector<mpz_class> h_;
};

// Presents another oracle's simples in a permuted order: label k here is perm[k] there.
class RelabeledOracle : public BlockOracle {
public:
    RelabeledOracle(const BlockOracle& base, std::vector<int> perm);
    int size() const override { return base_.size(); }
    mpz_class h(int x) const override { return base_.h(perm_.at(x)); }
    bool adjacent(int x, int y) const override { return base_.adjacent(perm_.at(x), perm_.at(y)); }
    mpz_class end_dim(int x) const override { return base_.end_dim(perm_.at(x)); }

private:
    const BlockOracle& base_;
    std::vector<int> perm_;
};

struct RecoveredInvariants {
    int t = 0;
    // normalized up to translation and duality
    Composition gamma;
    // labels of the simples t e_i in chain order
    std::vector<int> chain;
};

// Recovers t and gamma from h values, End-dimensions and the adjacency of the
// simples with minimal h. WindowError if the data never reaches the stable
// End-dimension; InvalidArgument on inconsistent data.
RecoveredInvariants recover_invariants(const BlockOracle& data);

} // namespace wblocks
