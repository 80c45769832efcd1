#include "wblocks/combinat/tableau.hpp"

#include "wblocks/error.hpp"

#include <algorithm>
#include <sstream>

namespace wblocks {

Pyramid::Pyramid(int m, int n, int s_minus) : m_(m), n_(n), s_minus_(s_minus)
{
    require(m >= 0 && n >= 0, "pyramid: negative row length");
    require(m <= n, "pyramid: top row longer than bottom row");
    require(s_minus >= 0 && s_minus <= n - m, "pyramid: shift out of range");
}

int Pyramid::row(int box) const
{
    require(box >= 1 && box <= size(), "pyramid: box index out of range");
    return box <= m_ ? 1 : 2;
}

int Pyramid::col(int box) const
{
    require(box >= 1 && box <= size(), "pyramid: box index out of range");
    return box <= m_ ? s_minus_ + box : box - m_;
}

int Pyramid::deg_entry(int i, int j) const
{
    return col(j) - col(i);
}

Tableau::Tableau(Pyramid p, std::vector<int> top, std::vector<int> bottom)
    : p_(p), top_(std::move(top)), bottom_(std::move(bottom))
{
    require(static_cast<int>(top_.size()) == p_.m(), "tableau: top row length mismatch");
    require(static_cast<int>(bottom_.size()) == p_.n(), "tableau: bottom row length mismatch");
}

int Tableau::entry(int box) const
{
    require(box >= 1 && box <= p_.size(), "tableau: box index out of range");
    return box <= p_.m() ? top_[box - 1] : bottom_[box - p_.m() - 1];
}

std::vector<int> Tableau::entries() const
{
    std::vector<int> e = top_;
    e.insert(e.end(), bottom_.begin(), bottom_.end());
    return e;
}

int Tableau::min_entry() const
{
    auto e = entries();
    require(!e.empty(), "empty tableau");
    return *std::min_element(e.begin(), e.end());
}

int Tableau::max_entry() const
{
    auto e = entries();
    require(!e.empty(), "empty tableau");
    return *std::max_element(e.begin(), e.end());
}

std::string Tableau::to_string() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < top_.size(); ++k)
        os << (k ? "," : "") << top_[k];
    os << ";";
    for (std::size_t k = 0; k < bottom_.size(); ++k)
        os << (k ? "," : "") << bottom_[k];
    return os.str();
}

int defect(const Tableau& a)
{
    int d = 0;
    int s = a.pyramid().s_minus();
    for (int i = 0; i < a.pyramid().m(); ++i)
        if (a.top()[i] == a.bottom()[s + i])
            ++d;
    return d;
}

int atyp(const Tableau& a)
{
    std::map<int, int> top;
    std::map<int, int> bot;
    for (int v : a.top())
        ++top[v];
    for (int v : a.bottom())
        ++bot[v];
    int t = 0;
    for (const auto& [v, c] : top) {
        auto it = bot.find(v);
        if (it != bot.end())
            t += std::min(c, it->second);
    }
    return t;
}

bool is_dominant(const Tableau& a)
{
    for (std::size_t i = 1; i < a.top().size(); ++i)
        if (!(a.top()[i - 1] > a.top()[i]))
            return false;
    for (std::size_t i = 1; i < a.bottom().size(); ++i)
        if (!(a.bottom()[i - 1] < a.bottom()[i]))
            return false;
    return true;
}

bool is_antidominant(const Tableau& a)
{
    for (std::size_t i = 1; i < a.top().size(); ++i)
        if (a.top()[i - 1] > a.top()[i])
            return false;
    for (std::size_t i = 1; i < a.bottom().size(); ++i)
        if (a.bottom()[i - 1] < a.bottom()[i])
            return false;
    return true;
}

bool row_equivalent(const Tableau& a, const Tableau& b)
{
    if (!(a.pyramid() == b.pyramid()))
        return false;
    return antidominant_rep(a) == antidominant_rep(b);
}

Tableau antidominant_rep(const Tableau& a)
{
    auto top = a.top();
    auto bot = a.bottom();
    std::sort(top.begin(), top.end());
    std::sort(bot.begin(), bot.end(), std::greater<>());
    return Tableau(a.pyramid(), top, bot);
}

std::vector<Tableau> down_up(const Tableau& a)
{
    std::vector<int> cols;
    int s = a.pyramid().s_minus();
    for (int i = 0; i < a.pyramid().m(); ++i)
        if (a.top()[i] == a.bottom()[s + i])
            cols.push_back(i);
    require(cols.size() < 31, "down_up: too many matched pairs");
    std::vector<Tableau> out;
    for (unsigned mask = 0; mask < (1u << cols.size()); ++mask) {
        auto top = a.top();
        auto bot = a.bottom();
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (mask & (1u << k)) {
                --top[cols[k]];
                --bot[s + cols[k]];
            }
        out.emplace_back(a.pyramid(), top, bot);
    }
    return out;
}

std::map<int, int> weight_of(const Tableau& a)
{
    std::map<int, int> w;
    for (int v : a.top())
        ++w[v];
    for (int v : a.bottom())
        --w[v];
    std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
    return w;
}

int inversions(const Tableau& a)
{
    int inv = 0;
    const auto& t = a.top();
    const auto& b = a.bottom();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j])
                ++inv;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (b[i] < b[j])
                ++inv;
    return inv;
}

int entry_sum(const Tableau& a)
{
    int s = 0;
    for (int v : a.entries())
        s += v;
    return s;
}

} // namespace wblocks
