#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace mimcount {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, CountSingleRecord) {
  const Result r = run({"count", "--g6", "D~{"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "10\n");
}

TEST(Cli, CountStreamAndOracle) {
  const Result r = run({"count"}, "D~{\nDhc\n\nBg\n");
  EXPECT_EQ(r.out, "10\n5\n2\n");
  EXPECT_EQ(run({"count", "--oracle"}, "D~{\nDhc\n").out, "10\n5\n");
  EXPECT_EQ(run({"count", "--memo", "off", "--g6", "Dhc"}).out, "5\n");
}

TEST(Cli, CountEdgeList) {
  EXPECT_EQ(run({"count", "--format", "edges"}, "3 2\n0 1\n1 2\n").out, "2\n");
}

TEST(Cli, CountJson) {
  const Result r = run({"count", "--json", "--g6", "Dhc"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("count"), 5);
}

TEST(Cli, MaxCount) { EXPECT_EQ(run({"maxcount", "--g6", "Dhc"}).out, "1 5\n"); }

TEST(Cli, Enumerate) {
  const Result r = run({"enumerate", "--g6", "Bg"});
  EXPECT_EQ(r.out, "0-1\n1-2\n");
  EXPECT_EQ(run({"enumerate", "--g6", "B?"}).out, "{}\n");
}

TEST(Cli, Classify) {
  EXPECT_EQ(run({"classify", "--vertex", "0", "--g6", "D~{"}).out, "alpha 4 beta 0 theta 6 phi 0\n");
  EXPECT_EQ(run({"classify", "--vertex", "9", "--g6", "D~{"}).code, 2);
}

TEST(Cli, BuildPipesIntoCount) {
  const Result b = run({"build", "F:9"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(run({"count"}, b.out).out, "49\n");
  const Result e = run({"build", "K:3", "--format", "edges"});
  EXPECT_EQ(e.out, "3 3\n0 1\n0 2\n1 2\n");
}

TEST(Cli, BuildUndefinedFamily) {
  EXPECT_EQ(run({"build", "F:14"}).code, 2);
  EXPECT_EQ(run({"build", "bogus"}).code, 2);
}

TEST(Cli, Table) {
  const Result r = run({"table", "--from", "1", "--to", "13", "--bounds", "f,q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 14u);
  EXPECT_NE(r.out.find("28"), std::string::npos);
  const Result j = run({"table", "--from", "14", "--to", "14", "--bounds", "f", "--json"});
  const auto rows = nlohmann::json::parse(j.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].dump().empty());
}

TEST(Cli, SweepExitCodes) {
  const Result ok = run({"sweep", "--bound", "f", "--quiet"}, "D~{\nDhc\n");
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("max count       10"), std::string::npos);

  const Result above = run({"sweep", "--bound", "f", "--quiet"}, "@\n");
  EXPECT_EQ(above.code, 1);

  const Result bad = run({"sweep", "--quiet"}, "D~{\n!!!\n");
  EXPECT_EQ(bad.code, 3);
}

TEST(Cli, SweepJson) {
  const Result r = run({"sweep", "--bound", "f", "--json", "--quiet"}, "D~{\nDhc\n");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("max_count"), 10);
  EXPECT_FALSE(j.contains("elapsed_seconds"));
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(run({"count"}, "not graph6\n").code, 3);
  EXPECT_EQ(run({"count", "--file", "/nonexistent/file"}).code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"count", "--memo", "sometimes"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Lemmas) {
  const Result r = run({"lemmas", "--suite", "falsetwin", "--seed", "3", "--instances", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ok"), std::string::npos);
  const Result f = run({"lemmas", "--suite", "formulas", "--json"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(nlohmann::json::parse(f.out).at("failed"), 0);
}

}  // namespace
}  // namespace mimcount
