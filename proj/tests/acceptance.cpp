// Runs acceptance criteria 1-12 and prints one line per criterion.
// Usage: acceptance [quick|full] [criterion ids...]

#include "wblocks/verify/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    using namespace wblocks::verify;
    Options opts;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "quick" || a == "full")
            opts.profile = parse_profile(a);
        else
            ids.push_back(std::atoi(a.c_str()));
    }
    bool all = true;
    for (const Result& r : run_suite(opts, ids)) {
        std::printf("criterion %2d: %s  %s  [%ld checks, %.2fs]", r.id, r.passed ? "PASS" : "FAIL", r.title.c_str(),
                    r.checks, r.seconds);
        for (const auto& [k, v] : r.notes)
            std::printf(" %s=%s", k.c_str(), v.c_str());
        if (!r.detail.empty())
            std::printf("  -- %s", r.detail.c_str());
        std::printf("\n");
        std::fflush(stdout);
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
