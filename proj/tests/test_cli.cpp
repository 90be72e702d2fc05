#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "pfshuffle/cli.hpp"
#include "pfshuffle/formal_quadratic.hpp"
#include "pfshuffle/straighten.hpp"

using namespace pfshuffle;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string trim(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

} // namespace

TEST(Cli, ThetaText) {
    const CliRun r = run({"theta", "--n", "4", "--tableau", "23;14", "--pfaffian-check"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out,
              "-x(1234/∅) - x(123/4) + x(124/3) - x(134/2) + x(234/1) + x(12/34) - x(13/24) + x(23/14)\n"
              "pfaffian substitution: zero\n");
}

TEST(Cli, ThetaTextAndJsonAgree) {
    const CliRun text = run({"theta", "--n", "4", "--tableau", "234;1"});
    const CliRun json = run({"theta", "--n", "4", "--tableau", "234;1", "--json"});
    ASSERT_EQ(text.code, exit_ok);
    ASSERT_EQ(json.code, exit_ok);
    const nlohmann::json j = nlohmann::json::parse(json.out);
    EXPECT_EQ(trim(j.dump(2)), trim(json.out));
    EXPECT_EQ(formal_quadratic_from_json(j.at("result").at("theta")), parse_formal_quadratic(trim(text.out), 4));
    EXPECT_EQ(j.at("config").at("command"), "theta");
    EXPECT_EQ(j.at("version"), library_version());
}

TEST(Cli, VerifyRankThree) {
    const CliRun r = run({"verify", "--n", "3"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("kernel_dim: 1"), std::string::npos);
    EXPECT_NE(r.out.find("span_ok: true"), std::string::npos);
}

TEST(Cli, VerifyResultIndependentOfThreads) {
    const CliRun one = run({"--threads", "1", "verify", "--n", "4", "--span", "--basis", "--json"});
    const CliRun four = run({"--threads", "4", "verify", "--n", "4", "--span", "--basis", "--json"});
    ASSERT_EQ(one.code, exit_ok);
    ASSERT_EQ(four.code, exit_ok);
    const auto a = nlohmann::json::parse(one.out), b = nlohmann::json::parse(four.out);
    EXPECT_EQ(a.at("result"), b.at("result"));
    EXPECT_NE(a.at("config").at("threads"), b.at("config").at("threads"));
}

TEST(Cli, PfaffianOfEmptyRow) {
    const CliRun r = run({"pfaffian", "--n", "3", "--row", ""});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "1\n");
    EXPECT_EQ(run({"pfaffian", "--n", "3", "--row", "1"}).out, "x14\n");
}

TEST(Cli, StraightenWithCheck) {
    const CliRun r = run({"straighten", "--n", "4", "--rows", "23;14", "--check"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "x(1234/∅) - x(12/34) + x(13/24)\nsteps: 2\ncheck: ok\n");
    const CliRun j = run({"straighten", "--n", "4", "--rows", "23;14", "--json", "--random-order", "--seed", "5"});
    ASSERT_EQ(j.code, exit_ok);
    const auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(monomial_expansion_from_json(parsed.at("result").at("expansion")),
              to_monomial_expansion(parse_formal_quadratic("x(1234/∅) - x(12/34) + x(13/24)", 4)));
    EXPECT_EQ(run({"straighten", "--n", "4", "--rows", "23;14", "--budget", "1"}).code, exit_check_failed);
}

TEST(Cli, SpinAction) {
    EXPECT_EQ(run({"spin", "--n", "3", "--op", "e1", "--vector", "23"}).out, "x(13)\n");
    EXPECT_EQ(run({"spin", "--n", "3", "--op", "e2", "--vector", "23"}).out, "0\n");
    EXPECT_EQ(run({"spin", "--n", "3", "--op", "q1", "--vector", "23"}).code, exit_usage);
}

TEST(Cli, Counterexample) {
    const CliRun r = run({"counterexample"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_NE(r.out.find("residual:  -x(1234/∅) + x(123/4)"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"theta", "--n", "4", "--tableau", "2x;14"}).code, exit_usage);
    EXPECT_EQ(run({"theta", "--n", "4", "--tableau", "12;34"}).code, exit_usage);
    EXPECT_EQ(run({"verify", "--n", "6"}).code, exit_usage);
    EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(run({}).code, exit_usage);
    const CliRun bad = run({"pfaffian", "--n", "3", "--row", "9"});
    EXPECT_EQ(bad.code, exit_usage);
    EXPECT_FALSE(bad.err.empty());
}
