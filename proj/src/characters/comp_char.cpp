#include "wblocks/characters/comp_char.hpp"

#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/error.hpp"

namespace wblocks {

namespace {

// base * prod_i (1 + chi^{alpha_i})^{e_i}
CompChar expand(const Composition& base, const Composition& exps)
{
    CompChar cur{{base, 1}};
    for (const auto& [j, e] : exps.parts()) {
        // exponent e_{j} sits on alpha_{j-1}
        CompChar next;
        for (const auto& [eta, c] : cur)
            for (int th = 0; th <= e; ++th)
                next[add_alpha(eta, j - 1, th)] += c * binomial(e, th);
        cur = std::move(next);
    }
    return cur;
}

} // namespace

CompChar ch_verma_w(const BlockKey& xi, const Composition& lambda)
{
    require(lambda.total() == xi.t, "ch_verma_w: |lambda| != t");
    return expand(lambda + xi.mu, lambda + xi.mu);
}

CompChar ch_simple_w(const BlockKey& xi, const Composition& lambda)
{
    require(lambda.total() == xi.t, "ch_simple_w: |lambda| != t");
    return expand(lambda + xi.mu, xi.mu);
}

std::map<Composition, mpz_class> decompose_char(const CompChar& c, const BlockKey& xi)
{
    CompChar rest;
    for (const auto& [eta, v] : c)
        if (v != 0)
            rest[eta] = v;
    // sum_i i*eta_i drops by one for every alpha added, so its maximum is dominance-minimal
    auto key = [](const Composition& eta) {
        long s = 0;
        for (const auto& [i, v] : eta.parts())
            s += static_cast<long>(i) * v;
        return s;
    };
    std::map<Composition, mpz_class> out;
    while (!rest.empty()) {
        auto best = rest.begin();
        for (auto it = rest.begin(); it != rest.end(); ++it)
            if (key(it->first) > key(best->first))
                best = it;
        Composition eta = best->first;
        mpz_class coef = best->second;
        Composition kappa;
        bool ok = coef > 0;
        for (const auto& [i, v] : eta.parts())
            if (v > xi.mu[i])
                kappa.set(i, v - xi.mu[i]);
        for (const auto& [i, v] : xi.mu.parts())
            if (eta[i] < v)
                ok = false;
        if (!ok || kappa.total() != xi.t)
            throw InvalidArgument("not in block span");
        out[kappa] += coef;
        for (const auto& [e2, v2] : ch_simple_w(xi, kappa)) {
            auto it = rest.find(e2);
            mpz_class nv = (it == rest.end() ? mpz_class(0) : it->second) - coef * v2;
            if (nv == 0) {
                if (it != rest.end())
                    rest.erase(it);
            } else {
                rest[e2] = nv;
            }
        }
    }
    return out;
}

mpz_class char_dimension(const CompChar& c)
{
    mpz_class s = 0;
    for (const auto& [eta, v] : c)
        s += v;
    return s;
}

} // namespace wblocks
