#include "wblocks/verify/suite.hpp"

#include "ctx.hpp"
#include "wblocks/error.hpp"

#include <array>
#include <chrono>

namespace wblocks::verify {

const std::string& criterion_title(int id)
{
    static const std::array<std::string, kCriteria> titles = {
        "closed Cartan formula equals BGG reciprocity sum",
        "graded Cartan at q=1 equals ungraded",
        "canonical-basis pairing equals closed pairing and graded Cartan",
        "character identities and Verma composition factors",
        "Verma character independent of the normal order",
        "h(lambda) laws",
        "top degree and generic diagonal",
        "linkage classes equal block-key and weight fibers",
        "center: supersymmetric polynomials, series, I = J on symmetric input",
        "block invariants recovered from Cartan data",
        "canonical-basis unit checks",
        "rank one sanity",
    };
    require(id >= 1 && id <= kCriteria, "unknown criterion " + std::to_string(id));
    return titles[id - 1];
}

Result run_criterion(int id, const Options& opts)
{
    Result res;
    res.id = id;
    res.title = criterion_title(id);
    detail::Ctx ctx(opts, res);
    auto start = std::chrono::steady_clock::now();
    try {
        detail::criterion_fn(id)(ctx);
        res.passed = !ctx.failed() && res.checks > 0;
        if (res.checks == 0)
            res.detail = "no checks ran";
    } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("error: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<Result> run_suite(const Options& opts, const std::vector<int>& ids)
{
    std::vector<Result> out;
    if (ids.empty()) {
        for (int id = 1; id <= kCriteria; ++id)
            out.push_back(run_criterion(id, opts));
    } else {
        for (int id : ids)
            out.push_back(run_criterion(id, opts));
    }
    return out;
}

Profile parse_profile(const std::string& s)
{
    if (s == "quick")
        return Profile::Quick;
    if (s == "full")
        return Profile::Full;
    throw InvalidArgument("unknown profile '" + s + "' (expected quick or full)");
}

} // namespace wblocks::verify
