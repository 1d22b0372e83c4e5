#include <gtest/gtest.h>

#include <json.hpp>

#include "cli_runner.hpp"

using analog::test_util::run_cli;
using analog::test_util::slurp;
using analog::test_util::TempDir;

namespace {

const std::string cli = ANALOG_CLI_PATH;
const char* fig1 = "50;a,b,c\n30;a,b,c,d\n20;a,c,b,d\n";

class Cli : public ::testing::Test {
 protected:
  TempDir dir;
  std::string log = dir.write("fig1.log", fig1);
  auto run(const std::vector<std::string>& args) { return run_cli(cli, args, dir); }
};

}  // namespace

TEST_F(Cli, LogMetricsJson) {
  auto r = run({"log-metrics", log, "--format", "json"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["magnitude"], 350);
  EXPECT_EQ(j["variety"], 4);
  EXPECT_EQ(j["lempel_ziv"], 70);
  EXPECT_NEAR(j["tl_avg"].get<double>(), 3.5, 1e-12);
  EXPECT_EQ(j.size(), 19u);
}

TEST_F(Cli, LogMetricsCsvUsesFourDecimals) {
  auto r = run({"log-metrics", log, "--format", "csv"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto nl = r.out.find('\n');
  EXPECT_EQ(r.out.substr(0, 10), "magnitude,");
  auto row = r.out.substr(nl + 1);
  EXPECT_EQ(row.substr(0, 16), "350,4,100,3,3.50");
  EXPECT_NE(row.find(",0.0300,"), std::string::npos);
}

TEST_F(Cli, UndefinedValuesAreReported) {
  auto single = dir.write("one.log", "1;a\n");
  auto r = run({"log-metrics", single});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["affinity"], "undefined");
  r = run({"log-metrics", single, "--format", "csv"});
  EXPECT_NE(r.out.find("undefined"), std::string::npos);
}

TEST_F(Cli, InputErrorsExitOne) {
  auto bad = dir.write("bad.log", "0;a\n");
  auto r = run({"log-metrics", bad});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  EXPECT_EQ(run({"log-metrics", dir.file("missing.log")}).status, 1);
  EXPECT_EQ(run({"log-metrics"}).status, 1);
  EXPECT_EQ(run({"no-such-command"}).status, 1);
  auto dup = dir.write("dup.log", "1;a\n1;a\n");
  EXPECT_EQ(run({"log-metrics", dup, "--duplicates", "reject"}).status, 1);
  EXPECT_EQ(run({"log-metrics", dup}).status, 0);
}

TEST_F(Cli, UnknownMinerSuggestsName) {
  auto r = run({"discover", log, "--miner", "alfa"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("expected one of: flower, tracenet, alpha, dfg, dfm"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("did you mean 'alpha'"), std::string::npos) << r.err;
}

TEST_F(Cli, DiscoverWritesNetAndDot) {
  auto dot = dir.file("out.dot");
  auto r = run({"discover", log, "--miner", "dfm", "--dot", dot});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["places"].size(), 6u);
  EXPECT_EQ(j["transitions"].size(), 9u);
  EXPECT_EQ(j["source"], "p_start");
  auto d = slurp(dot);
  EXPECT_EQ(d.rfind("digraph net", 0), 0u);
  auto net = dir.write("net.json", r.out);
  auto m = run({"model-metrics", net});
  ASSERT_EQ(m.status, 0) << m.err;
  EXPECT_EQ(nlohmann::json::parse(m.out)["size"], 15);
  auto csv = run({"discover", log, "--miner", "alpha", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("size,mismatch,", 0), 0u);
}

TEST_F(Cli, DfgMetricsAndDfgDiscovery) {
  auto r = run({"dfg-metrics", log});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 6);
  EXPECT_EQ(j.size(), 13u);
  auto g = run({"discover", log, "--miner", "dfg"});
  ASSERT_EQ(g.status, 0);
  EXPECT_EQ(nlohmann::json::parse(g.out)["edges"].size(), 9u);
}

TEST_F(Cli, CompareRequiresProperSublog) {
  auto sub = dir.write("sub.log", "50;a,b,c\n");
  auto r = run({"compare", sub, log, "--miner", "flower"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["log_before"]["variety"], 3);
  EXPECT_EQ(j["model_after"]["size"], 9);
  EXPECT_EQ(j["evidence"]["falsifications"], 0);
  auto back = run({"compare", log, sub, "--miner", "flower"});
  EXPECT_EQ(back.status, 1);
  EXPECT_NE(back.err.find("not a proper sublog"), std::string::npos);
  EXPECT_EQ(run({"compare", log, log, "--miner", "flower"}).status, 1);
  auto csv = run({"compare", sub, log, "--miner", "dfg", "--format", "csv"});
  EXPECT_EQ(csv.out.rfind("miner,log_measure,size,", 0), 0u);
}

TEST_F(Cli, ReproduceSuites) {
  auto r = run({"reproduce", "--suite", "flower"});
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["suites"].size(), 1u);
  // An absurdly tight tolerance turns printed four-decimal values into mismatches.
  auto tight = run({"reproduce", "--suite", "flower", "--tolerance", "1e-12"});
  EXPECT_EQ(tight.status, 2);
  EXPECT_EQ(run({"reproduce", "--suite", "bogus"}).status, 1);
}

TEST_F(Cli, FuzzRuns) {
  auto r = run({"fuzz", "--miner", "tracenet", "--pairs", "50", "--seed", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["evidence"]["pairs"], 50);
  EXPECT_EQ(run({"fuzz", "--miner", "dfm", "--pairs", "10", "--max-variants", "1"}).status, 1);
}

TEST_F(Cli, OutputFileMatchesStdout) {
  auto out = dir.file("metrics.json");
  auto a = run({"log-metrics", log});
  ASSERT_EQ(run({"log-metrics", log, "-o", out}).status, 0);
  EXPECT_EQ(slurp(out), a.out);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> cmds = {
      {"log-metrics", log},
      {"discover", log, "--miner", "alpha"},
      {"compare", dir.write("s.log", "20;a,c,b,d\n"), log, "--miner", "dfm"},
      {"fuzz", "--miner", "alpha", "--pairs", "40", "--jobs", "4"},
  };
  for (const auto& c : cmds) {
    auto a = run(c), b = run(c);
    EXPECT_EQ(a.status, 0) << c[0];
    EXPECT_EQ(a.out, b.out) << c[0];
  }
}
