#include "wblocks/algebra/qnumbers.hpp"

#include "wblocks/error.hpp"

#include <mutex>

namespace wblocks {

namespace {

std::mutex g_fact_mutex;
std::vector<Laurent> g_qfact{Laurent(1)};

} // namespace

Laurent qint(int n)
{
    require(n >= 0, "qint: negative argument");
    if (n == 0)
        return Laurent();
    Laurent num = Laurent::q(n) - Laurent::q(-n);
    Laurent den = Laurent::q(1) - Laurent::q(-1);
    return exact_div(num, den);
}

Laurent qfact(int n)
{
    require(n >= 0, "qfact: negative argument");
    std::lock_guard<std::mutex> lock(g_fact_mutex);
    while (static_cast<int>(g_qfact.size()) <= n) {
        int k = static_cast<int>(g_qfact.size());
        g_qfact.push_back(g_qfact.back() * qint(k));
    }
    return g_qfact[n];
}

Laurent qbinom(int n, int r)
{
    require(n >= 0, "qbinom: negative n");
    if (r < 0 || r > n)
        return Laurent();
    return exact_div(qfact(n), qfact(r) * qfact(n - r));
}

Laurent qmultinomial(const std::vector<int>& ks)
{
    int s = 0;
    Laurent den(1);
    for (int k : ks) {
        require(k >= 0, "qmultinomial: negative part");
        s += k;
        den *= qfact(k);
    }
    return exact_div(qfact(s), den);
}

mpz_class factorial(int n)
{
    require(n >= 0, "factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class binomial(int n, int r)
{
    require(n >= 0, "binomial: negative n");
    if (r < 0 || r > n)
        return 0;
    mpz_class res;
    mpz_bin_uiui(res.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return res;
}

} // namespace wblocks
