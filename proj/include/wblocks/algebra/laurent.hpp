#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace wblocks {

/*
 * Laurent polynomials in q with integer coefficients.
 *
 * Stored sparsely as exponent -> coefficient; zero coefficients are never kept,
 * so structural equality is mathematical equality.
 */
class Laurent {
public:
    Laurent() = default;
    Laurent(long c);
    explicit Laurent(const mpz_class& c);

    static Laurent monomial(int exp, const mpz_class& c = 1);
    static Laurent q(int exp = 1) { return monomial(exp); }

    bool is_zero() const { return terms_.empty(); }
    int min_degree() const;
    int max_degree() const;
    mpz_class coeff(int exp) const;
    const std::map<int, mpz_class>& terms() const { return terms_; }

    // q -> q^{-1}
    Laurent bar() const;
    mpz_class eval1() const;
    // multiply by q^k
    Laurent shifted(int k) const;
    // keep only the terms with exponent > 0
    Laurent positive_part() const;
    bool nonnegative() const;

    void add_term(int exp, const mpz_class& c);

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    Laurent& operator*=(const mpz_class& c);

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(Laurent a, const mpz_class& c) { return a *= c; }
    friend Laurent operator*(const mpz_class& c, Laurent a) { return a *= c; }
    Laurent operator-() const;

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

    // human readable, highest degree first, e.g. "q^2 + 2 + q^-2"
    std::string to_string() const;

private:
    std::map<int, mpz_class> terms_;
};

Laurent pow(const Laurent& x, unsigned e);

// Exact quotient num/den. Throws InternalError when den does not divide num.
Laurent exact_div(const Laurent& num, const Laurent& den);

} // namespace wblocks
