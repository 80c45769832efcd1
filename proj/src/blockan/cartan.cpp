#include "wblocks/blockan/cartan.hpp"

#include "wblocks/algebra/qnumbers.hpp"
#include "wblocks/blockan/detail.hpp"
#include "wblocks/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace wblocks {

namespace detail {

SupportRange support_range(std::initializer_list<const Composition*> cs)
{
    SupportRange r{0, -1};
    bool any = false;
    for (const Composition* c : cs) {
        if (c->empty())
            continue;
        if (!any) {
            r = {c->min_support(), c->max_support()};
            any = true;
        } else {
            r.lo = std::min(r.lo, c->min_support());
            r.hi = std::max(r.hi, c->max_support());
        }
    }
    return r;
}

bool tau_sum(const Composition& lambda, const Composition& rho, const Composition& gamma,
             const std::function<void(const TauTerm&)>& visit)
{
    SupportRange s = support_range({&lambda, &rho, &gamma});
    if (s.lo > s.hi) {
        visit(TauTerm{{}, {}, 0});
        return true;
    }
    const int lo = s.lo - 1;
    const int hi = s.hi + 1;
    // tau_j ranges over [max(lambda_j, rho_j), lambda_j + min(lambda_{j-1}, rho_{j-1})]
    std::vector<int> tlo;
    std::vector<int> thi;
    for (int j = lo; j <= hi + 1; ++j) {
        tlo.push_back(std::max(lambda[j], rho[j]));
        thi.push_back(lambda[j] + std::min(lambda[j - 1], rho[j - 1]));
        if (tlo.back() > thi.back())
            return false;
    }
    std::vector<int> tau(tlo);
    TauTerm term;
    term.lo = lo;
    while (true) {
        // beta_i = lambda_{i+1} + tau_i - tau_{i+1}
        term.tau.assign(tau.begin(), tau.end());
        term.beta.clear();
        bool ok = true;
        for (int i = lo; i <= hi; ++i) {
            int b = lambda[i + 1] + tau[i - lo] - tau[i - lo + 1];
            if (b < 0)
                ok = false;
            term.beta.push_back(b);
        }
        if (ok)
            visit(term);
        std::size_t k = 0;
        while (k < tau.size() && tau[k] == thi[k]) {
            tau[k] = tlo[k];
            ++k;
        }
        if (k == tau.size())
            break;
        ++tau[k];
    }
    return true;
}

} // namespace detail

mpz_class verma_mult(const BlockKey& xi, const Composition& lambda, const Composition& kappa)
{
    require(lambda.total() == xi.t && kappa.total() == xi.t, "verma_mult: size mismatch");
    if (lambda.empty())
        return 1;
    auto s = detail::support_range({&lambda, &kappa});
    // theta_j = theta_{j-1} + kappa_j - lambda_j
    mpz_class r = 1;
    int theta = 0;
    for (int j = s.lo; j <= s.hi; ++j) {
        theta += kappa[j] - lambda[j];
        if (theta < 0 || theta > lambda[j + 1])
            return 0;
        r *= binomial(lambda[j + 1], theta);
    }
    return theta == 0 ? r : mpz_class(0);
}

std::optional<Composition> cartan_rho(const Composition& lambda, const Composition& kappa)
{
    require(lambda.total() == kappa.total(), "cartan_rho: size mismatch");
    Composition rho;
    if (lambda.empty())
        return rho;
    auto s = detail::support_range({&lambda, &kappa});
    // rho_{i+1} = lambda_{i+1} + rho_i - kappa_i
    int prev = 0;
    for (int i = s.lo - 1; i <= s.hi; ++i) {
        int next = lambda[i + 1] + prev - kappa[i];
        if (next < 0 || next > lambda[i + 1] + std::min(lambda[i], prev))
            return std::nullopt;
        rho.set(i + 1, next);
        prev = next;
    }
    if (prev != 0)
        return std::nullopt;
    return rho;
}

mpz_class cartan_entry(const BlockKey& xi, const Composition& lambda, const Composition& kappa)
{
    require(lambda.total() == xi.t && kappa.total() == xi.t, "cartan_entry: size mismatch");
    auto rho = cartan_rho(lambda, kappa);
    if (!rho)
        return 0;
    const Composition gamma = xi.gamma();
    mpq_class sum = 0;
    detail::tau_sum(lambda, *rho, gamma, [&](const detail::TauTerm& tt) {
        mpq_class term = 1;
        for (std::size_t k = 0; k < tt.beta.size(); ++k) {
            int i = tt.lo + static_cast<int>(k);
            int b = tt.beta[k];
            int ti = tt.tau[k];
            term *= mpq_class(binomial(b, ti - lambda[i]) * binomial(b, ti - (*rho)[i]),
                              factorial(b) * factorial(b + gamma[i]));
        }
        // gamma outside the iteration range contributes 1/gamma_i!
        for (const auto& [i, g] : gamma.parts())
            if (i < tt.lo || i >= tt.lo + static_cast<int>(tt.beta.size()))
                term /= mpq_class(factorial(g));
        sum += term;
    });
    sum *= factorial(xi.m) * factorial(xi.n);
    sum.canonicalize();
    ensure(sum.get_den() == 1, "cartan_entry: non-integral result");
    return sum.get_num();
}

mpz_class cartan_oracle(const BlockKey& xi, const Composition& lambda, const Composition& kappa)
{
    require(lambda.total() == xi.t && kappa.total() == xi.t, "cartan_oracle: size mismatch");
    const Composition gamma = xi.gamma();
    mpq_class sum = 0;
    std::vector<Composition> betas;
    if (xi.t == 0) {
        betas.emplace_back();
    } else {
        auto s = detail::support_range({&lambda, &kappa});
        betas = compositions_in(xi.t, Window{s.lo, s.hi + 1});
    }
    for (const Composition& beta : betas) {
        mpz_class a = verma_mult(xi, beta, lambda);
        if (a == 0)
            continue;
        mpz_class b = verma_mult(xi, beta, kappa);
        if (b == 0)
            continue;
        mpz_class den = 1;
        Composition bg = beta + gamma;
        for (const auto& [i, v] : bg.parts())
            den *= factorial(beta[i]) * factorial(v);
        sum += mpq_class(a * b, den);
    }
    sum *= factorial(xi.m) * factorial(xi.n);
    sum.canonicalize();
    ensure(sum.get_den() == 1, "cartan_oracle: non-integral result");
    return sum.get_num();
}

namespace {

template <class Entry, class F>
CartanWindow<Entry> assemble(const BlockKey& xi, Window w, unsigned threads, F entry)
{
    CartanWindow<Entry> out;
    out.block = xi;
    out.labels = compositions_in(xi.t, w);
    const std::size_t k = out.labels.size();
    out.entries.assign(k, std::vector<Entry>(k));
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(k, 1)));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t r = next++; r < k; r = next++) {
            try {
                for (std::size_t c = 0; c < k; ++c)
                    out.entries[r][c] = entry(xi, out.labels[r], out.labels[c]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

} // namespace

CartanWindow<mpz_class> cartan_window(const BlockKey& xi, Window w, unsigned threads)
{
    return assemble<mpz_class>(xi, w, threads, cartan_entry);
}

CartanWindow<Laurent> graded_cartan_window(const BlockKey& xi, Window w, unsigned threads)
{
    return assemble<Laurent>(xi, w, threads, graded_cartan);
}

} // namespace wblocks
