#pragma once

#include <map>
#include <string>
#include <vector>

namespace wblocks {

/*
 * Two-row pyramid: m boxes on top, n >= m on the bottom, the top row shifted
 * s_minus columns right. Boxes are numbered 1..m on top (left to right) and
 * m+1..m+n on the bottom.
 */
class Pyramid {
public:
    Pyramid(int m, int n, int s_minus);

    int m() const { return m_; }
    int n() const { return n_; }
    int s_minus() const { return s_minus_; }
    int s_plus() const { return n_ - m_ - s_minus_; }
    int size() const { return m_ + n_; }

    // 1 for top, 2 for bottom
    int row(int box) const;
    int col(int box) const;
    // col(j) - col(i)
    int deg_entry(int i, int j) const;

    friend bool operator==(const Pyramid&, const Pyramid&) = default;

private:
    int m_;
    int n_;
    int s_minus_;
};

class Tableau {
public:
    Tableau(Pyramid p, std::vector<int> top, std::vector<int> bottom);

    const Pyramid& pyramid() const { return p_; }
    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }
    // entry of box j, 1-based in pyramid numbering
    int entry(int box) const;
    std::vector<int> entries() const;
    int min_entry() const;
    int max_entry() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b)
    {
        if (auto c = a.top_ <=> b.top_; c != 0)
            return c;
        return a.bottom_ <=> b.bottom_;
    }

    // "a1,a2;b1,b2,b3"
    std::string to_string() const;

private:
    Pyramid p_;
    std::vector<int> top_;
    std::vector<int> bottom_;
};

// Number of matched column pairs: top a_i and bottom b_{s_minus+i} equal.
int defect(const Tableau& a);
// Maximal number of disjoint equal (top, bottom) pairs.
int atyp(const Tableau& a);
// a_1 > ... > a_m and b_1 < ... < b_n
bool is_dominant(const Tableau& a);
// a nondecreasing and b nonincreasing
bool is_antidominant(const Tableau& a);
// Same multiset in each row.
bool row_equivalent(const Tableau& a, const Tableau& b);
// Row-sorted representative: top ascending, bottom descending.
Tableau antidominant_rep(const Tableau& a);
// The 2^defect tableaux obtained by subtracting 1 from a subset of matched pairs (A itself included).
std::vector<Tableau> down_up(const Tableau& a);
// Multiplicity function sum e_{a_i} - sum e_{b_j}, zeros dropped.
std::map<int, int> weight_of(const Tableau& a);
// #{i<j : a_i > a_j} + #{i<j : b_i < b_j}
int inversions(const Tableau& a);
int entry_sum(const Tableau& a);

} // namespace wblocks
