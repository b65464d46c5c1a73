#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/graph6.hpp"
#include "mimcount/harness.hpp"
#include "mimcount/report.hpp"
#include "support.hpp"

namespace mimcount {
namespace {

using testing::PipeStream;
using testing::geng_command;

SweepReport sweep_geng(const std::string& flags, SweepOptions o) {
  PipeStream in(geng_command(flags));
  SweepReport r = sweep(in, o);
  EXPECT_EQ(in.close(), 0);
  return r;
}

TEST(Harness, ConnectedOrderFive) {
  SweepOptions o;
  o.bound = BoundKind::F;
  const SweepReport r = sweep_geng("-c 5", o);
  EXPECT_EQ(r.order, 5u);
  EXPECT_EQ(r.graphs_seen, 21u);
  EXPECT_EQ(r.graphs_counted, 21u);
  EXPECT_EQ(r.max_count, 10);
  EXPECT_EQ(r.maximizers, (std::vector<std::string>{"D~{"}));
  EXPECT_EQ(r.tally.at_exact_bound, 1u);
  EXPECT_EQ(r.tally.strictly_below, 20u);
  EXPECT_TRUE(r.sound());
  EXPECT_TRUE(r.errors.empty());
}

TEST(Harness, ConnectedOrderEightHasTwoMaximizers) {
  SweepOptions o;
  o.bound = BoundKind::F;
  const SweepReport r = sweep_geng("-c 8", o);
  EXPECT_EQ(r.graphs_seen, 11117u);
  EXPECT_EQ(r.max_count, 28);
  ASSERT_EQ(r.maximizers.size(), 2u);
  EXPECT_EQ(r.tally.above, 0u);
  EXPECT_EQ(r.tally.at_exact_bound, 2u);
  const Graph a = from_graph6(r.maximizers[0]);
  const Graph b = from_graph6(r.maximizers[1]);
  const Graph k8 = complete_graph(8);
  const Graph kk = star_join(4, {4});
  EXPECT_TRUE((testing::isomorphic(a, k8) && testing::isomorphic(b, kk)) ||
              (testing::isomorphic(a, kk) && testing::isomorphic(b, k8)));
}

TEST(Harness, FilterAgainstQ) {
  SweepOptions o;
  o.bound = BoundKind::Q;
  o.filter.exclude_regular = false;
  const SweepReport r = sweep_geng("8", o);
  EXPECT_EQ(r.graphs_seen, 12346u);
  // Two disjoint K4 beat K8 (36 against 28).
  EXPECT_EQ(r.max_count, 36);
  EXPECT_EQ(r.tally.above, 0u);
  ASSERT_EQ(r.maximizers.size(), 1u);
  EXPECT_TRUE(testing::isomorphic(from_graph6(r.maximizers[0]), clique_union({4, 4})));
}

TEST(Harness, Filters) {
  SweepFilter f;
  f.require_connected = true;
  EXPECT_FALSE(f.accepts(clique_union({2, 2})));
  EXPECT_TRUE(f.accepts(path_graph(4)));
  f.exclude_regular = true;
  EXPECT_FALSE(f.accepts(cycle_graph(5)));
  f.max_degree = 2;
  EXPECT_TRUE(f.accepts(path_graph(4)));
  EXPECT_FALSE(f.accepts(star_join(1, {1, 1, 1})));
}

TEST(Harness, EmptyStream) {
  std::istringstream in("");
  const SweepReport r = sweep(in, {});
  EXPECT_FALSE(r.order.has_value());
  EXPECT_EQ(r.records_read, 0u);
  EXPECT_EQ(r.max_count, 0);
  EXPECT_TRUE(r.maximizers.empty());
}

TEST(Harness, MalformedAndWrongOrderRecordsAreReported) {
  std::istringstream in("D~{\nnot-graph6!\n\nDhc\nBg\n");
  SweepOptions o;
  o.bound = BoundKind::F;
  const SweepReport r = sweep(in, o);
  EXPECT_EQ(r.order, 5u);
  EXPECT_EQ(r.records_read, 4u);
  EXPECT_EQ(r.graphs_seen, 2u);
  ASSERT_EQ(r.errors.size(), 2u);
  EXPECT_EQ(r.errors[0].line, 2u);
  EXPECT_EQ(r.errors[1].line, 5u);
  EXPECT_EQ(r.max_count, 10);
}

TEST(Harness, ViolationsAreRecorded) {
  // K1 has one maximal induced matching while f(1) = 0.
  std::istringstream in("@\n");
  SweepOptions o;
  o.bound = BoundKind::F;
  const SweepReport r = sweep(in, o);
  EXPECT_EQ(r.tally.above, 1u);
  EXPECT_FALSE(r.sound());
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].graph6, "@");
  EXPECT_EQ(r.violations[0].message, "1");
}

TEST(Harness, IndependentOfJobsAndBatchSize) {
  SweepOptions base;
  base.bound = BoundKind::F;
  base.filter.require_connected = true;
  std::string text;
  {
    PipeStream in(geng_command("7"));
    std::ostringstream all;
    all << in.rdbuf();
    text = all.str();
  }
  std::istringstream in1(text);
  base.jobs = 1;
  base.batch_size = 8192;
  const auto ref = to_json(sweep(in1, base), false);
  for (unsigned jobs : {2u, 3u}) {
    for (std::size_t batch : {1u, 7u, 100u}) {
      std::istringstream in(text);
      SweepOptions o = base;
      o.jobs = jobs;
      o.batch_size = batch;
      EXPECT_EQ(to_json(sweep(in, o), false), ref) << jobs << " " << batch;
    }
  }
}

TEST(Harness, CheckpointResumeMatchesFreshRun) {
  const auto dir = std::filesystem::temp_directory_path() / ("mimcount_ckpt_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "sweep.json").string();

  std::string text;
  {
    PipeStream in(geng_command("7"));
    std::ostringstream all;
    all << in.rdbuf();
    text = all.str();
  }
  SweepOptions o;
  o.bound = BoundKind::F;
  o.jobs = 1;
  std::istringstream fresh_in(text);
  const auto fresh = to_json(sweep(fresh_in, o), false);

  // Interrupt after roughly a third of the records, then resume on the whole.
  const std::size_t cut = text.find('\n', text.size() / 3) + 1;
  std::istringstream head(text.substr(0, cut));
  SweepOptions partial = o;
  partial.checkpoint_path = path;
  partial.checkpoint_every = 100;
  partial.batch_size = 50;
  sweep(head, partial);
  ASSERT_TRUE(std::filesystem::exists(path));

  std::istringstream whole(text);
  SweepOptions resumed = partial;
  EXPECT_EQ(to_json(sweep(whole, resumed), false), fresh);
  std::filesystem::remove_all(dir);
}

TEST(Harness, CheckpointWithDifferentOptionsIsRejected) {
  const auto dir = std::filesystem::temp_directory_path() / ("mimcount_ckpt2_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "sweep.json").string();
  std::istringstream a("D~{\nDhc\n");
  SweepOptions o;
  o.bound = BoundKind::F;
  o.checkpoint_path = path;
  sweep(a, o);
  std::istringstream b("D~{\nDhc\n");
  o.bound = BoundKind::G;
  EXPECT_THROW(sweep(b, o), std::exception);
  std::filesystem::remove_all(dir);
}

TEST(Harness, QnxSmallCases) {
  PipeStream a(geng_command("4"));
  EXPECT_EQ(sweep_qnx(a, 4, 3), 5);
  PipeStream b(geng_command("6"));
  EXPECT_EQ(sweep_qnx(b, 6, 4), 11);
}

TEST(Harness, BoundExpr) {
  EXPECT_EQ(bound_expr(BoundKind::Q, 9).rational_value(), Rational(60));
  EXPECT_THROW(bound_expr(BoundKind::Q, 7), DomainError);
  EXPECT_THROW(bound_expr(BoundKind::None, 7), DomainError);
  EXPECT_EQ(parse_bound("I"), BoundKind::I);
  EXPECT_EQ(parse_bound("none"), BoundKind::None);
}

TEST(Harness, JsonReport) {
  std::istringstream in("D~{\nDhc\n");
  SweepOptions o;
  o.bound = BoundKind::F;
  const SweepReport r = sweep(in, o);
  const auto j = to_json(r, false);
  EXPECT_EQ(j.at("max_count"), 10);
  EXPECT_FALSE(j.contains("elapsed_seconds"));
  EXPECT_EQ(to_json(sweep_report_from_json(j), false), j);
  EXPECT_TRUE(to_json(r, true).contains("elapsed_seconds"));
}

TEST(Harness, BigCountsSerialiseAsStrings) {
  SweepReport r;
  r.max_count = pow(BigInt(10), 30);
  const auto j = to_json(r, false);
  EXPECT_TRUE(j.at("max_count").is_string());
  EXPECT_EQ(sweep_report_from_json(j).max_count, r.max_count);
}

}  // namespace
}  // namespace mimcount
