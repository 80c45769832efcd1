#include "wblocks/combinat/bruhat.hpp"

#include "wblocks/error.hpp"

#include <algorithm>
#include <set>

namespace wblocks {

std::vector<Tableau> bruhat_lower_covers(const Tableau& a)
{
    std::vector<Tableau> out;
    const auto& top = a.top();
    const auto& bot = a.bottom();
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = i + 1; j < top.size(); ++j)
            if (top[i] > top[j]) {
                auto t = top;
                std::swap(t[i], t[j]);
                out.emplace_back(a.pyramid(), t, bot);
            }
    for (std::size_t i = 0; i < bot.size(); ++i)
        for (std::size_t j = i + 1; j < bot.size(); ++j)
            if (bot[i] < bot[j]) {
                auto b = bot;
                std::swap(b[i], b[j]);
                out.emplace_back(a.pyramid(), top, b);
            }
    for (std::size_t i = 0; i < top.size(); ++i)
        for (std::size_t j = 0; j < bot.size(); ++j)
            if (top[i] == bot[j]) {
                auto t = top;
                auto b = bot;
                --t[i];
                --b[j];
                out.emplace_back(a.pyramid(), t, b);
            }
    return out;
}

bool bruhat_leq(const Tableau& a, const Tableau& b, Window w)
{
    require(a.pyramid() == b.pyramid(), "bruhat_leq: different pyramids");
    for (int v : a.entries())
        if (!w.contains(v))
            throw WindowError("undecidable in window: entries of the lower tableau leave the window");
    for (int v : b.entries())
        if (!w.contains(v))
            throw WindowError("undecidable in window: entries of the upper tableau leave the window");
    if (a == b)
        return true;
    if (a.pyramid().size() == 0)
        return false;
    // Individual entries only decrease along cover moves, so nothing below min(a)
    // can come back; the entry sum never increases.
    const int floor = a.min_entry();
    const int target_sum = entry_sum(a);
    std::set<Tableau> seen{b};
    std::vector<Tableau> todo{b};
    while (!todo.empty()) {
        Tableau cur = todo.back();
        todo.pop_back();
        for (Tableau& nb : bruhat_lower_covers(cur)) {
            if (nb.min_entry() < floor || entry_sum(nb) < target_sum)
                continue;
            if (nb == a)
                return true;
            if (seen.insert(nb).second)
                todo.push_back(std::move(nb));
        }
    }
    return false;
}

std::vector<Tableau> tableaux_in(const Pyramid& p, Window w)
{
    std::vector<Tableau> out;
    int k = p.size();
    int base = w.width();
    require(base > 0, "tableaux_in: empty window");
    std::vector<int> digits(k, 0);
    while (true) {
        std::vector<int> top;
        std::vector<int> bot;
        for (int i = 0; i < k; ++i)
            (i < p.m() ? top : bot).push_back(w.lo + digits[i]);
        out.emplace_back(p, top, bot);
        int pos = k - 1;
        while (pos >= 0 && digits[pos] == base - 1)
            digits[pos--] = 0;
        if (pos < 0)
            break;
        ++digits[pos];
    }
    return out;
}

} // namespace wblocks
