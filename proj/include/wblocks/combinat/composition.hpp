#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace wblocks {

// Closed integer interval [lo, hi].
struct Window {
    int lo = 0;
    int hi = -1;

    bool contains(int i) const { return lo <= i && i <= hi; }
    int width() const { return hi - lo + 1; }
};

/*
 * A composition: a finitely supported function Z -> N.
 *
 * Only positive parts are stored. The canonical dense form starts at the
 * smallest index in the support (offset 0 for the empty composition).
 */
class Composition {
public:
    Composition() = default;
    static Composition from_dense(int offset, const std::vector<int>& parts);
    static Composition unit(int i, int mult = 1);

    int operator[](int i) const;
    void set(int i, int v);
    void add(int i, int dv);

    bool empty() const { return parts_.empty(); }
    int total() const;
    int min_support() const;
    int max_support() const;
    const std::map<int, int>& parts() const { return parts_; }

    int offset() const { return empty() ? 0 : min_support(); }
    std::vector<int> dense() const;
    std::vector<int> dense(int lo, int hi) const;

    Composition shifted(int s) const;
    // i -> -i
    Composition reflected() const;

    friend Composition operator+(const Composition& a, const Composition& b);
    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    // (offset, dense parts) lexicographically
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

    // "offset=0;parts=1,2"
    std::string to_string() const;

private:
    std::map<int, int> parts_;
};

// All compositions of total with support inside w, in increasing order.
std::vector<Composition> compositions_in(int total, Window w);

// The partition lambda^T with lambda^T_i = #{j : lambda_j >= i}, i >= 1.
std::vector<int> comp_transpose(const Composition& c);
// Nonzero parts in order.
std::vector<int> comp_strictify(const Composition& c);
// mu_i = nu_{s+i} for all i, or mu_i = nu_{s-i} for all i, for some s.
bool comp_equal_tdual(const Composition& a, const Composition& b);
// Canonical representative under translation and duality: support shifted to
// start at 0, then the lexicographically smaller of (dense, reversed dense).
Composition comp_normalize(const Composition& c);

// lambda <= mu in dominance order (same total; partial sums of lambda bounded by those of mu).
bool dominance_leq(const Composition& lambda, const Composition& mu);
// The simple root alpha_i = e_i - e_{i+1} applied to c: move one unit from i+1 to i.
Composition add_alpha(const Composition& c, int i, int times = 1);

} // namespace wblocks
