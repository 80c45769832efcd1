#include "wblocks/blockan/recover.hpp"

#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/blockan/cartan.hpp"
#include "wblocks/error.hpp"

#include <algorithm>
#include <set>

namespace wblocks {

FormulaOracle::FormulaOracle(BlockKey xi, Window w) : xi_(std::move(xi)), labels_(compositions_in(xi_.t, w)) {}

mpz_class FormulaOracle::h(int x) const
{
    return h_count(labels_.at(x));
}

bool FormulaOracle::adjacent(int x, int y) const
{
    return cartan_entry(xi_, labels_.at(x), labels_.at(y)) != 0;
}

mpz_class FormulaOracle::end_dim(int x) const
{
    return cartan_entry(xi_, labels_.at(x), labels_.at(x));
}

MatrixOracle::MatrixOracle(std::vector<std::vector<mpz_class>> matrix, std::vector<mpz_class> h)
    : matrix_(std::move(matrix)), h_(std::move(h))
{
    require(h_.size() == matrix_.size(), "block data: h has the wrong length");
    for (const auto& row : matrix_)
        require(row.size() == matrix_.size(), "block data: matrix is not square");
}

RelabeledOracle::RelabeledOracle(const BlockOracle& base, std::vector<int> perm) : base_(base), perm_(std::move(perm))
{
    require(static_cast<int>(perm_.size()) == base_.size(), "relabel: wrong permutation length");
}

namespace {

// sum_r binom(t,r) t! a! b! / ((a+t-r)! (b+r)!)
mpq_class demon(int t, int a, int b)
{
    mpq_class s = 0;
    for (int r = 0; r <= t; ++r)
        s += mpq_class(binomial(t, r) * factorial(t) * factorial(a) * factorial(b),
                       factorial(a + t - r) * factorial(b + r));
    s.canonicalize();
    return s;
}

std::vector<int> chain_order(const BlockOracle& data, const std::vector<int>& xs)
{
    std::set<int> pool(xs.begin(), xs.end());
    auto neighbours = [&](int x) {
        std::vector<int> nb;
        for (int y : pool)
            if (y != x && data.adjacent(x, y))
                nb.push_back(y);
        return nb;
    };
    for (int x : xs)
        if (neighbours(x).size() > 2)
            throw InvalidArgument("inconsistent data: minimal simples do not form a chain");
    // walk to one end, then across
    int start = xs.front();
    int prev = -1;
    int cur = start;
    while (true) {
        int step = -1;
        for (int y : neighbours(cur))
            if (y != prev)
                step = y;
        if (step < 0 || step == start)
            break;
        prev = cur;
        cur = step;
    }
    std::vector<int> chain{cur};
    prev = -1;
    while (true) {
        int step = -1;
        for (int y : neighbours(chain.back()))
            if (y != prev)
                step = y;
        if (step < 0)
            break;
        if (std::find(chain.begin(), chain.end(), step) != chain.end())
            throw InvalidArgument("inconsistent data: minimal simples form a cycle");
        prev = chain.back();
        chain.push_back(step);
    }
    if (chain.size() != xs.size())
        throw InvalidArgument("inconsistent data: minimal simples are not connected");
    return chain;
}

} // namespace

RecoveredInvariants recover_invariants(const BlockOracle& data)
{
    require(data.size() > 0, "recover: no simples");
    std::vector<mpz_class> hs(data.size());
    for (int x = 0; x < data.size(); ++x)
        hs[x] = data.h(x);
    mpz_class hmin = *std::min_element(hs.begin(), hs.end());
    int t = 0;
    while (binomial(t + 2, 2) < hmin)
        ++t;
    if (binomial(t + 2, 2) != hmin || t == 0)
        throw InvalidArgument("inconsistent data: minimal h is not binom(t+2,2) with t >= 1");

    std::vector<int> xmin;
    for (int x = 0; x < data.size(); ++x)
        if (hs[x] == hmin)
            xmin.push_back(x);
    RecoveredInvariants out;
    out.t = t;
    out.chain = chain_order(data, xmin);
    const int k = static_cast<int>(out.chain.size());
    if (k < 3)
        throw WindowError("window too narrow: fewer than three minimal simples");

    std::vector<mpz_class> ends(k);
    for (int j = 0; j < k; ++j)
        ends[j] = data.end_dim(out.chain[j]);
    // d(i) <= binom(2t,t) with equality away from gamma, so the stable value is the maximum
    mpz_class stable = *std::max_element(ends.begin(), ends.end());
    if (ends.front() != stable || ends.back() != stable)
        throw WindowError("window too narrow: End-dimensions do not reach the stable value at both ends");

    const mpz_class c2t = binomial(2 * t, t);
    Composition gamma;
    int next = 0;
    for (int j = k - 1; j >= 0; --j) {
        mpq_class d = mpq_class(c2t * ends[j], stable);
        d.canonicalize();
        // the r = t term alone is the limit as gamma_j grows
        mpq_class limit(factorial(t) * factorial(next), factorial(next + t));
        limit.canonicalize();
        if (d <= limit)
            throw InvalidArgument("inconsistent data: End-dimension below every admissible value");
        int g = 0;
        while (true) {
            mpq_class v = demon(t, g, next);
            if (v == d)
                break;
            if (v < d)
                throw InvalidArgument("inconsistent data: End-dimension not attained");
            ++g;
        }
        gamma.set(j, g);
        next = g;
    }
    out.gamma = comp_normalize(gamma);
    return out;
}

} // namespace wblocks
