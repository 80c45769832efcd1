#include "wblocks/combinat/composition.hpp"

#include "wblocks/error.hpp"

#include <algorithm>
#include <sstream>

namespace wblocks {

Composition Composition::from_dense(int offset, const std::vector<int>& parts)
{
    Composition c;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        require(parts[k] >= 0, "composition parts must be nonnegative");
        c.set(offset + static_cast<int>(k), parts[k]);
    }
    return c;
}

Composition Composition::unit(int i, int mult)
{
    Composition c;
    c.set(i, mult);
    return c;
}

int Composition::operator[](int i) const
{
    auto it = parts_.find(i);
    return it == parts_.end() ? 0 : it->second;
}

void Composition::set(int i, int v)
{
    require(v >= 0, "composition parts must be nonnegative");
    if (v == 0)
        parts_.erase(i);
    else
        parts_[i] = v;
}

void Composition::add(int i, int dv)
{
    set(i, (*this)[i] + dv);
}

int Composition::total() const
{
    int s = 0;
    for (const auto& [i, v] : parts_)
        s += v;
    return s;
}

int Composition::min_support() const
{
    require(!empty(), "support of empty composition");
    return parts_.begin()->first;
}

int Composition::max_support() const
{
    require(!empty(), "support of empty composition");
    return parts_.rbegin()->first;
}

std::vector<int> Composition::dense() const
{
    if (empty())
        return {};
    return dense(min_support(), max_support());
}

std::vector<int> Composition::dense(int lo, int hi) const
{
    std::vector<int> out;
    for (int i = lo; i <= hi; ++i)
        out.push_back((*this)[i]);
    return out;
}

Composition Composition::shifted(int s) const
{
    Composition c;
    for (const auto& [i, v] : parts_)
        c.parts_.emplace(i + s, v);
    return c;
}

Composition Composition::reflected() const
{
    Composition c;
    for (const auto& [i, v] : parts_)
        c.parts_.emplace(-i, v);
    return c;
}

Composition operator+(const Composition& a, const Composition& b)
{
    Composition c = a;
    for (const auto& [i, v] : b.parts_)
        c.add(i, v);
    return c;
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b)
{
    if (auto c = a.offset() <=> b.offset(); c != 0)
        return c;
    auto da = a.dense();
    auto db = b.dense();
    return std::lexicographical_compare_three_way(da.begin(), da.end(), db.begin(), db.end());
}

std::string Composition::to_string() const
{
    std::ostringstream os;
    os << "offset=" << offset() << ";parts=";
    auto d = dense();
    for (std::size_t k = 0; k < d.size(); ++k)
        os << (k ? "," : "") << d[k];
    return os.str();
}

namespace {

void fill(int total, int pos, Window w, Composition& cur, std::vector<Composition>& out)
{
    if (pos == w.hi) {
        cur.set(pos, total);
        out.push_back(cur);
        cur.set(pos, 0);
        return;
    }
    for (int v = 0; v <= total; ++v) {
        cur.set(pos, v);
        fill(total - v, pos + 1, w, cur, out);
    }
    cur.set(pos, 0);
}

} // namespace

std::vector<Composition> compositions_in(int total, Window w)
{
    require(total >= 0, "negative composition size");
    std::vector<Composition> out;
    if (total == 0) {
        out.emplace_back();
        return out;
    }
    if (w.width() <= 0)
        return out;
    Composition cur;
    fill(total, w.lo, w, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> comp_transpose(const Composition& c)
{
    int top = 0;
    for (const auto& [i, v] : c.parts())
        top = std::max(top, v);
    std::vector<int> out;
    for (int i = 1; i <= top; ++i) {
        int cnt = 0;
        for (const auto& [j, v] : c.parts())
            if (v >= i)
                ++cnt;
        out.push_back(cnt);
    }
    return out;
}

std::vector<int> comp_strictify(const Composition& c)
{
    std::vector<int> out;
    for (const auto& [i, v] : c.parts())
        out.push_back(v);
    return out;
}

bool comp_equal_tdual(const Composition& a, const Composition& b)
{
    if (a.empty() || b.empty())
        return a.empty() && b.empty();
    auto da = a.dense();
    auto db = b.dense();
    if (da == db)
        return true;
    std::reverse(db.begin(), db.end());
    return da == db;
}

Composition comp_normalize(const Composition& c)
{
    if (c.empty())
        return c;
    auto d = c.dense();
    auto r = d;
    std::reverse(r.begin(), r.end());
    return Composition::from_dense(0, std::min(d, r));
}

bool dominance_leq(const Composition& lambda, const Composition& mu)
{
    if (lambda.total() != mu.total())
        return false;
    if (lambda.empty())
        return true;
    int lo = std::min(lambda.min_support(), mu.min_support());
    int hi = std::max(lambda.max_support(), mu.max_support());
    int sl = 0;
    int sm = 0;
    for (int i = lo; i <= hi; ++i) {
        sl += lambda[i];
        sm += mu[i];
        if (sl > sm)
            return false;
    }
    return true;
}

Composition add_alpha(const Composition& c, int i, int times)
{
    Composition r = c;
    r.add(i, times);
    r.add(i + 1, -times);
    return r;
}

} // namespace wblocks
