#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wblocks::verify {

enum class Profile { Quick, Full };

struct Options {
    Profile profile = Profile::Full;
    // criterion whose computed value is perturbed once, 0 for none
    int inject_fault = 0;
};

struct Result {
    int id = 0;
    std::string title;
    bool passed = false;
    // number of individual comparisons made
    long checks = 0;
    double seconds = 0;
    // first failure or an error message
    std::string detail;
    // extra observations, e.g. the stable N per comparison
    std::vector<std::pair<std::string, std::string>> notes;
};

constexpr int kCriteria = 12;

const std::string& criterion_title(int id);
Result run_criterion(int id, const Options& opts);
// All criteria in order, or only those listed.
std::vector<Result> run_suite(const Options& opts, const std::vector<int>& ids = {});

Profile parse_profile(const std::string& s);

} // namespace wblocks::verify
