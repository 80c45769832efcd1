#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace wblocks {

// A variable x_i (1 <= i <= m) or y_j (1 <= j <= n).
struct Var {
    enum class Kind { X, Y };
    Kind kind;
    int index;

    static Var x(int i) { return {Kind::X, i}; }
    static Var y(int j) { return {Kind::Y, j}; }
};

/*
 * Polynomials in x_1..x_m, y_1..y_n over Q.
 *
 * Exponent vectors have length m+n with the x block first.
 */
class MultiPoly {
public:
    using Exponent = std::vector<int>;

    MultiPoly(int m, int n) : m_(m), n_(n) {}

    static MultiPoly constant(int m, int n, const mpq_class& c);
    static MultiPoly variable(int m, int n, Var v);

    int m() const { return m_; }
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const std::map<Exponent, mpq_class>& terms() const { return terms_; }
    mpq_class coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const mpq_class& c);

    MultiPoly partial(Var v) const;
    // replace v by g everywhere
    MultiPoly subst(Var v, const MultiPoly& g) const;
    // exchange two variables
    MultiPoly swapped(Var a, Var b) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const mpq_class& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const mpq_class& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    int slot(Var v) const;

    int m_;
    int n_;
    std::map<Exponent, mpq_class> terms_;
};

} // namespace wblocks
