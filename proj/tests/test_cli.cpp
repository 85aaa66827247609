#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "siegel2/cli.hpp"

using siegel2::io::json;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "siegel2");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = siegel2::cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct EnvGuard {
    std::string name;
    EnvGuard(const char* n, const char* v) : name(n) { setenv(n, v, 1); }
    ~EnvGuard() { unsetenv(name.c_str()); }
};

} // namespace

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"no-such-command"}).code, 2);
    EXPECT_EQ(run({"eval-theta", "--tau", "1,2,3"}).code, 2);
    EXPECT_EQ(run({"eval-theta", "--tau", "0,1,0,2,0,1"}).code, 2);  // Im tau not positive definite
    EXPECT_EQ(run({"check-member", "--matrix", "1,2,3"}).code, 2);
    EXPECT_EQ(run({"check-member", "--matrix", "1,1,0,0,0,1,0,0,0,0,1,0,0,0,0,1"}).code, 2);
    EXPECT_EQ(run({"--digits", "5", "eval-theta"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "char-table"}).code, 2);
    EXPECT_EQ(run({"catalog", "--family", "rb9"}).code, 2);
    EXPECT_EQ(run({"classify-set", "--set", "{1,11}"}).code, 2);
    EXPECT_EQ(run({"eval-det", "--pair", "17"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, PassingCommandsExitZero)
{
    for (auto args : std::vector<std::vector<std::string>>{
             {"eval-theta"}, {"eval-grad"}, {"eval-det", "--pair", "D35"}, {"classify-set", "--set", "{1,2,5,10}"},
             {"orbit-census"}, {"char-table"}, {"check-member", "--matrix", "1,0,0,0,0,1,0,0,0,0,1,0,0,0,0,1"},
             {"pattern-census"}, {"grad-map", "--tau", "0.1,1.2,0.3,0.4,-0.2,1.5"}, {"verify-lemmas"}}) {
        auto r = run(args);
        EXPECT_EQ(r.code, 0) << args.front() << " " << r.err;
        auto j = json::parse(r.out);
        EXPECT_EQ(j["command"], args.front());
        EXPECT_TRUE(j["pass"].get<bool>());
    }
}

TEST(Cli, JacobiSignCheckReportsFailure)
{
    auto r = run({"--samples", "2", "verify-jacobi"});
    EXPECT_EQ(r.code, 1);
    auto j = json::parse(r.out);
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_TRUE(j["result"]["bijective_onto_c4minus"].get<bool>());
}

TEST(Cli, OutputIsDeterministic)
{
    for (auto args : std::vector<std::vector<std::string>>{{"--seed", "4", "--samples", "3", "catalog", "--family", "rb4"},
                                                           {"--samples", "2", "verify-transform"},
                                                           {"--format", "csv", "eval-det"}}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, EnvironmentOverridesDefaultsAndFlagsOverrideEnvironment)
{
    EnvGuard g("SIEGEL2_SEED", "9");
    auto env = json::parse(run({"char-table"}).out);
    EXPECT_EQ(env["config"]["seed"], 9);
    auto flag = json::parse(run({"--seed", "3", "char-table"}).out);
    EXPECT_EQ(flag["config"]["seed"], 3);
    EnvGuard f("SIEGEL2_FORMAT", "csv");
    EXPECT_EQ(run({"char-table"}).out.rfind("# command=char-table", 0), 0u);
}

TEST(Cli, DigitsFollowEps)
{
    auto j = json::parse(run({"--eps", "1e-20", "eval-theta", "--char", "00|00"}).out);
    EXPECT_GE(j["config"]["digits"].get<int>(), 40);
    EXPECT_EQ(j["config"]["backend"], "cpp_bin_float_50");
}

TEST(Cli, CheckMemberReportsCoordinates)
{
    auto j = json::parse(run({"check-member", "--matrix", "1,2,0,0,0,1,0,0,0,0,1,0,0,0,-2,1"}).out);
    EXPECT_TRUE(j["result"]["in_gamma_2_4"].get<bool>());
    EXPECT_FALSE(j["result"]["member"].get<bool>());
    EXPECT_EQ(j["result"]["g_coordinates"], "010000000");
}

TEST(Cli, CatalogReportsRb8Rank)
{
    auto j = json::parse(run({"catalog", "--family", "rb8"}).out);
    const auto& f = j["result"]["families"][0];
    EXPECT_EQ(f["count"], 10);
    EXPECT_TRUE(f.contains("rational_rank"));
    EXPECT_EQ(f["published_independent"], 6);
}

TEST(Cli, CsvHasHeaderAndRows)
{
    auto r = run({"--format", "csv", "orbit-census"});
    std::istringstream is(r.out);
    std::string line;
    std::getline(is, line);
    EXPECT_EQ(line.rfind("# command=orbit-census", 0), 0u);
    std::getline(is, line);
    EXPECT_EQ(line, "class,count,published,match");
    int rows = 0;
    while (std::getline(is, line))
        ++rows;
    EXPECT_EQ(rows, 12);
}
