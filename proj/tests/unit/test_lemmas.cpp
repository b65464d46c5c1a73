#include <gtest/gtest.h>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/lemmas.hpp"
#include "mimcount/matching.hpp"

namespace mimcount {
namespace {

TEST(Lemmas, SandwichOnNamedGraphs) {
  for (const Graph& g : {complete_graph(5), cycle_graph(5), path_graph(6), star_join(4, {4}), clique_union({3, 2})}) {
    const LemmaCheckResult r = check_sandwich(g);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.instances_tested, g.order());
  }
}

TEST(Lemmas, PendantCliqueGluesAtOneVertex) {
  const Graph g = attach_pendant_clique(complete_graph(4), 0, 4);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_EQ(block_decomposition(g).cutpoints.to_vector(), (std::vector<std::size_t>{0}));
  const LemmaCheckResult r = check_pendant_block(complete_graph(4), 0, 4);
  EXPECT_EQ(r.hypothesis_held, 1u);
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(check_pendant_block(complete_graph(4), 0, 2), std::exception);
}

TEST(Lemmas, PendantOnPath) {
  for (long r = 3; r <= 6; ++r) {
    for (Vertex v = 0; v < 4; ++v) EXPECT_TRUE(check_pendant_block(path_graph(4), v, r).passed()) << r << " " << v;
  }
}

TEST(Lemmas, RetwinOnFiveCycle) {
  const RetwinInstance i = evaluate_retwin(cycle_graph(5), 0, 1);
  EXPECT_EQ(i.count, 5);
  EXPECT_EQ(i.count_u_to_v, 4);
  EXPECT_EQ(i.count_v_to_u, 4);
  const LemmaCheckResult r = check_retwin(cycle_graph(5), 0, 1);
  EXPECT_EQ(r.instances_tested, 1u);
  EXPECT_THROW(check_retwin(cycle_graph(5), 0, 2), GraphError);
}

TEST(Lemmas, RetwinHypothesisGuardsTheConclusion) {
  const LemmaCheckResult r = run_retwin_suite({5, 60});
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.hypothesis_held, 0u);
}

TEST(Lemmas, FalseTwinMergeOnPath) {
  const Graph p3 = path_graph(3);
  EXPECT_EQ(count_maximal(p3), 2);
  EXPECT_EQ(count_maximal(with_edge(p3, 0, 2)), 3);
  EXPECT_TRUE(check_false_twin_merge(p3, 0, 2).passed());
  EXPECT_THROW(check_false_twin_merge(p3, 0, 1), GraphError);
}

TEST(Lemmas, SuitesPassAndAreDeterministic) {
  for (const char* name : {"sandwich", "pendant", "retwin", "falsetwin"}) {
    const LemmaCheckResult a = run_suite(name, {42, 40});
    EXPECT_TRUE(a.passed()) << name;
    EXPECT_EQ(a.seed, 42u);
    const LemmaCheckResult b = run_suite(name, {42, 40});
    EXPECT_EQ(a.instances_tested, b.instances_tested) << name;
    EXPECT_EQ(a.hypothesis_held, b.hypothesis_held) << name;
  }
  EXPECT_THROW(run_suite("nope", {}), DomainError);
}

TEST(Lemmas, RandomGraphsAreSeeded) {
  RandomGraphs a(9);
  RandomGraphs b(9);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(a.next(1, 12), b.next(1, 12));
  RandomGraphs c(9);
  for (int i = 0; i < 200; ++i) {
    const Graph g = c.next(3, 5);
    EXPECT_GE(g.order(), 3u);
    EXPECT_LE(g.order(), 5u);
  }
}

}  // namespace
}  // namespace mimcount
