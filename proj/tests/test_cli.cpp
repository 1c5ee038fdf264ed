#include "multspace/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace multspace;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "multspace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  return nlohmann::ordered_json::parse(r.out);
}

}  // namespace

TEST(Cli, FakeDegree) {
  auto r = run({"fake-degree", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(3): 1\n(2,1): u + u^2\n(1,1,1): u^3\n");
  EXPECT_EQ(run({"fake-degree", "--m", "2", "--sigma", "1,1"}).out, "(1,1): u\n");
  EXPECT_EQ(run({"fake-degree", "--m", "3", "--sigma", "4,1"}).code, 2);
  EXPECT_EQ(run({"fake-degree", "--m", "3", "--sigma", "1,2"}).code, 2);
  EXPECT_EQ(run({"fake-degree", "--m", "3", "--sigma", "x"}).code, 2);
  auto j = json_of({"fake-degree", "--m", "2"});
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["payload"]["fake_degrees"][1]["poly"]["1"], 1);
}

TEST(Cli, BChar) {
  auto r = run({"bchar", "--type", "A", "--rank", "1", "--hw", "1", "--m", "2", "--gamma", "1,1", "--local"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "e(O(0)) * (1 + u)\ne(O(2)) * (u)\n");
  EXPECT_EQ(run({"bchar", "--hw", "1", "--m", "1", "--gamma", "1"}).out, "e(O(1)) * (1)\n");
  EXPECT_EQ(run({"bchar", "--hw", "1", "--m", "2", "--gamma", "2", "--global"}).code, 2);
  EXPECT_EQ(run({"bchar", "--hw", "1", "--m", "2", "--gamma", "2", "--global", "--local", "--max-degree", "2"}).code, 2);
  EXPECT_EQ(run({"bchar", "--type", "A", "--rank", "2", "--hw", "1,-1", "--m", "2", "--gamma", "2"}).code, 2);
  EXPECT_EQ(run({"bchar", "--type", "A", "--rank", "2", "--hw", "1", "--m", "2", "--gamma", "2"}).code, 2);
  EXPECT_EQ(run({"bchar", "--type", "Q", "--rank", "2", "--hw", "1,0", "--m", "2", "--gamma", "2"}).code, 2);
  auto g = run({"bchar", "--hw", "1", "--m", "2", "--gamma", "2", "--global", "--max-degree", "2"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "e(O(0)) * (1 + 2u + 3u^2)\ne(O(2)) * (1 + u + 2u^2)\n[truncated above u^2]\n");
}

TEST(Cli, BCharJsonRoundTripsAndAgreesWithText) {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"bchar", "--type", "A", "--rank", "2", "--hw", "1,0", "--m", "3", "--gamma", "2,1"},
        std::vector<std::string>{"bchar", "--type", "B", "--rank", "2", "--hw", "0,1", "--hw", "0,0", "--m", "2",
                                 "--gamma", "2", "--global", "--max-degree", "3"}}) {
    auto text = run(args).out;
    auto j = json_of(args);
    auto chi = graded_character_from_json(j["payload"]);
    EXPECT_EQ(to_text(chi), text);
    EXPECT_EQ(to_json(chi), j["payload"]);
  }
}

TEST(Cli, OutputIsByteStable) {
  std::vector<std::string> args{"--format", "json", "duality-check", "--type", "A", "--rank", "2", "--hw", "1,0", "--m", "3", "--gamma", "2,1"};
  EXPECT_EQ(run(args).out, run(args).out);
  auto t = json_of({"--timing", "kronecker", "--tau", "2,1", "--sigma", "2,1", "--gamma", "3"});
  EXPECT_TRUE(t.contains("timing_ms"));
  EXPECT_FALSE(json_of({"kronecker", "--tau", "2,1", "--sigma", "2,1", "--gamma", "3"}).contains("timing_ms"));
}

TEST(Cli, DualityCheck) {
  auto r = run({"duality-check", "--hw", "1", "--m", "2", "--gamma", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("pass", 0), 0u);
  auto j = json_of({"duality-check", "--type", "A", "--rank", "2", "--hw", "1,0", "--m", "3", "--gamma", "2,1"});
  EXPECT_EQ(j["payload"]["verdict"], "pass");
  EXPECT_EQ(j["payload"]["shift"], 3);
  EXPECT_EQ(run({"duality-check", "--hw", "1", "--m", "2", "--gamma", "2,,1"}).code, 2);
}

TEST(Cli, OracleVerify) {
  auto r = run({"oracle-verify", "--type", "A", "--rank", "1", "--hw", "1", "--m", "3"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  auto j = json_of({"oracle-verify", "--type", "A", "--rank", "1", "--hw", "1", "--m", "3"});
  EXPECT_EQ(j["payload"]["formula_vs_oracle"].size(), 3u);
  for (const auto& row : j["payload"]["formula_vs_oracle"]) EXPECT_TRUE(row["match"].get<bool>());
  auto big = run({"oracle-verify", "--type", "A", "--rank", "1", "--hw", "1", "--m", "6"});
  EXPECT_EQ(big.code, 3);
  EXPECT_NE(big.err.find("46080"), std::string::npos);
  auto bj = run({"--format", "json", "oracle-verify", "--hw", "1", "--m", "6"});
  EXPECT_EQ(bj.code, 3);
  EXPECT_EQ(nlohmann::ordered_json::parse(bj.out)["error"]["kind"], "budget");
  EXPECT_EQ(run({"oracle-verify", "--type", "A", "--rank", "0", "--hw", "1", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"oracle-verify", "--type", "A", "--rank", "2", "--hw", "1,1", "--m", "2"}).code, 2);
}

TEST(Cli, OracleBudgetFromEnvironment) {
  setenv("MULTSPACE_ORACLE_MAX_DIM", "5", 1);
  EXPECT_EQ(run({"oracle-verify", "--hw", "1", "--m", "2"}).code, 3);
  unsetenv("MULTSPACE_ORACLE_MAX_DIM");
  EXPECT_EQ(run({"oracle-verify", "--hw", "1", "--m", "2"}).code, 0);
}

TEST(Cli, SmallCommands) {
  EXPECT_EQ(json_of({"kronecker", "--tau", "2,1", "--sigma", "2,1", "--gamma", "1,1,1"})["payload"]["value"], "1");
  EXPECT_EQ(json_of({"kostka", "--shape", "2,1", "--content", "1,1,1"})["payload"]["value"], "2");
  EXPECT_EQ(run({"kostka", "--shape", "2,1", "--content", "1,1"}).code, 2);
  auto ct = json_of({"char-table", "--m", "3"});
  EXPECT_EQ(ct["payload"]["classes"].size(), 3u);
  EXPECT_EQ(run({"char-table", "--m", "13"}).code, 3);
  auto ob = json_of({"orbit", "--type", "A", "--rank", "2", "--weight", "-1,1"});
  EXPECT_EQ(ob["payload"]["dominant"], nlohmann::ordered_json({1, 0}));
  EXPECT_EQ(ob["payload"]["dual"], nlohmann::ordered_json({0, 1}));
  EXPECT_EQ(ob["payload"]["orbit"].size(), 3u);
  auto nc = run({"natural-char", "--rank", "1", "--m", "2", "--gamma", "2"});
  EXPECT_EQ(nc.out, run({"bchar", "--hw", "1", "--m", "2", "--gamma", "2"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"--format", "yaml", "fake-degree", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"fake-degree"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
