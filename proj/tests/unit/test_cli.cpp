#include "wblocks/cli/cli.hpp"
#include "wblocks/cli/io.hpp"
#include "wblocks/verify/suite.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wblocks;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(input);
    int code = cli::run_cli(args, out, err, in);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cartan csv")
{
    Run r = run({"cartan", "--m", "1", "--n", "1", "--block", "mu=0;nu=0;t=1", "--window", "-2..2", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "label,\"-2:1\",\"-1:1\",\"0:1\",\"1:1\",\"2:1\"");
    for (int row = 0; row < 5; ++row) {
        REQUIRE(std::getline(lines, line));
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');)
            cells.push_back(c);
        REQUIRE(cells.size() == 6);
        for (int col = 0; col < 5; ++col) {
            int d = std::abs(row - col);
            CHECK(cells[col + 1] == (d == 0 ? "2" : d == 1 ? "1" : "0"));
        }
    }
}

TEST_CASE("h and cb")
{
    Run h = run({"h", "--lambda", "offset=0;parts=1"});
    CHECK(h.code == 0);
    CHECK(h.out == "3\n");
    Run cb = run({"cb", "--N", "2", "--signs", "+-", "--key", "2;2"});
    CHECK(cb.code == 0);
    CHECK(cb.out == "{\"terms\":[{\"key\":[2,2],\"coeff\":{\"0\":\"1\"}},{\"key\":[1,1],\"coeff\":{\"1\":\"-1\"}}]}\n");
}

TEST_CASE("usage and computation errors")
{
    CHECK(run({}).code == 1);
    CHECK(run({"h"}).code == 1);
    CHECK(run({"h", "--lambda", "nonsense"}).code == 1);
    CHECK(run({"cartan", "--block", "mu=0;nu=0;t=1", "--window", "2..1"}).code == 1);
    CHECK(run({"cartan", "--m", "2", "--block", "mu=0;nu=0;t=1", "--window", "0..1"}).code == 1);
    CHECK(run({"recover"}, "{}").code == 1);
    Run narrow = run({"recover"}, "{\"matrix\":[[\"2\"]],\"h\":[\"3\"]}");
    CHECK(narrow.code == 2);
    CHECK_FALSE(narrow.err.empty());
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cartan json feeds recover")
{
    Run c = run({"cartan", "--block", "mu=0:1;nu=0;t=1", "--window", "-3..4"});
    REQUIRE(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["labels"].size() == 8);
    Run r = run({"recover"}, c.out);
    REQUIRE(r.code == 0);
    auto o = nlohmann::json::parse(r.out);
    CHECK(o["t"] == 1);
    CHECK(o["gamma_short"] == "0:1");
}

TEST_CASE("graded cartan at q = 1 matches cartan")
{
    Run g = run({"graded-cartan", "--block", "mu=0;nu=1:1;t=1", "--window", "0..2", "--q-at-1", "--format", "csv"});
    Run c = run({"cartan", "--block", "mu=0;nu=1:1;t=1", "--window", "0..2", "--format", "csv"});
    CHECK(g.code == 0);
    CHECK(g.out == c.out);
}

TEST_CASE("other subcommands produce json")
{
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
             {"blocks", "--m", "2", "--n", "2", "--window", "0..1"},
             {"char", "--block", "mu=0;nu=0;t=1", "--lambda", "0:1", "--decompose"},
             {"verma-char", "--tableau", "1,2;2,3", "--depth", "2", "--order", "column"},
             {"end-dim", "--block", "mu=0;nu=0;t=1", "--i", "0"},
             {"equiv", "--block", "mu=0:1;nu=2:1;t=0"},
             {"center", "--m", "1", "--n", "2", "--r", "2"},
             {"cb", "--N", "3", "--signs", "+-", "--key", "2;2", "--op", "canonical", "--format", "tensor"},
             {"cb", "--N", "3", "--op", "pairing-formula", "--block", "mu=0;nu=0;t=1", "--lambda", "2:1", "--kappa",
              "2:1"}}) {
        Run r = run(args);
        INFO(args[0]);
        CHECK(r.code == 0);
        CHECK(nlohmann::json::accept(r.out));
    }
    Run vm = run({"verma-mult", "--block", "mu=0;nu=0;t=1", "--lambda", "3:1", "--kappa", "2:1"});
    CHECK(vm.out == "1\n");
    Run pf = run({"cb", "--N", "3", "--op", "pairing-formula", "--block", "mu=0;nu=0;t=1", "--lambda", "2:1", "--kappa",
                  "2:1"});
    CHECK(nlohmann::json::parse(pf.out)["pairing"]["coeffs"] == nlohmann::json{{"0", "1"}, {"2", "1"}});
}

TEST_CASE("config files")
{
    auto path = std::filesystem::temp_directory_path() / "wblocks_test_config.toml";
    {
        std::ofstream f(path);
        f << "[h]\nlambda=\"0:1\"\n";
    }
    Run r = run({"--config", path.string(), "h"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    std::filesystem::remove(path);
}

TEST_CASE("the cache never changes output")
{
    auto dir = std::filesystem::temp_directory_path() / "wblocks_test_cache";
    std::filesystem::remove_all(dir);
    setenv("WBLOCKS_CACHE_DIR", dir.c_str(), 1);
    std::vector<std::vector<std::string>> cmds{
        {"cartan", "--block", "mu=0;nu=0;t=2", "--window", "0..2"},
        {"graded-cartan", "--block", "mu=0;nu=1:1;t=1", "--window", "0..2", "--format", "csv"},
        {"cb", "--N", "2", "--signs", "+-", "--key", "2;2"},
        {"h", "--lambda", "0:2,1"}};
    for (const auto& c : cmds) {
        Run plain = run(c);
        std::vector<std::string> cached{"--cache"};
        cached.insert(cached.end(), c.begin(), c.end());
        Run first = run(cached);
        Run second = run(cached);
        CHECK(first.out == plain.out);
        CHECK(second.out == plain.out);
    }
    CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 4);
    unsetenv("WBLOCKS_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify with injected faults")
{
    Run ok = run({"verify", "--profile", "quick"});
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["passed"] == true);
    for (int id = 1; id <= verify::kCriteria; ++id) {
        Run r = run({"verify", "--profile", "quick", "--inject-fault", std::to_string(id)});
        INFO("fault in criterion " << id);
        CHECK(r.code == 3);
        auto j = nlohmann::json::parse(r.out);
        for (const auto& c : j["criteria"])
            CHECK(c["passed"].get<bool>() == (c["id"].get<int>() != id));
    }
}

TEST_CASE("parsers")
{
    CHECK(cli::parse_composition("offset=2;parts=1,0,3") == Composition::from_dense(2, {1, 0, 3}));
    CHECK(cli::parse_composition("-1:2") == Composition::unit(-1, 2));
    CHECK(cli::parse_composition("0").empty());
    CHECK(cli::parse_window("-2..3").lo == -2);
    CHECK_THROWS_AS(cli::parse_window("3"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_block("mu=0;nu=0"), cli::UsageError);
}
