#include <gtest/gtest.h>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/graph6.hpp"
#include "mimcount/lemmas.hpp"
#include "mimcount/matching.hpp"

namespace mimcount {
namespace {

TEST(Matching, CompleteGraphs) {
  for (std::size_t n = 0; n <= 12; ++n) {
    const BigInt expected = n < 2 ? BigInt(1) : BigInt(n * (n - 1) / 2);
    EXPECT_EQ(count_maximal(complete_graph(n)), expected) << n;
  }
}

TEST(Matching, EdgelessGraphsHaveOnlyTheEmptyMatching) {
  EXPECT_EQ(count_maximal(Graph{}), 1);
  EXPECT_EQ(count_maximal(Graph::from_edge_list(7, {})), 1);
  const auto all = enumerate_maximal(Graph::from_edge_list(3, {}));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].size(), 0u);
  EXPECT_EQ(format_matching(all[0]), "");
}

TEST(Matching, SmallExamples) {
  EXPECT_EQ(count_maximal(cycle_graph(5)), 5);
  EXPECT_EQ(count_maximal(path_graph(3)), 2);
  EXPECT_EQ(count_maximal(path_graph(4)), 3);
  EXPECT_EQ(count_maximal(cycle_graph(6)), 3);  // opposite edge pairs
  EXPECT_EQ(count_maximal(star_join(4, {4})), 28);
}

TEST(Matching, MultiplicativeOverComponents) {
  const Graph g = disjoint_union(complete_graph(5), disjoint_union(cycle_graph(5), path_graph(3)));
  EXPECT_EQ(count_maximal(g), 10 * 5 * 2);
}

TEST(Matching, LargeCountsDoNotOverflow) {
  std::vector<long> parts(28, 5);
  const Graph g = clique_union(parts);
  BigInt expected = 1;
  for (int i = 0; i < 28; ++i) expected *= 10;
  EXPECT_EQ(count_maximal(g), expected);
  EXPECT_GT(expected, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Matching, MemoSettingsAgree) {
  RandomGraphs rng(11);
  for (int i = 0; i < 60; ++i) {
    const Graph g = rng.next(10, 30);
    const BigInt on = count_maximal(g, {Memo::On});
    EXPECT_EQ(on, count_maximal(g, {Memo::Off})) << to_graph6(g);
    EXPECT_EQ(on, count_maximal(g, {Memo::Auto})) << to_graph6(g);
  }
}

TEST(Matching, AgreesWithOracleOnRandomGraphs) {
  RandomGraphs rng(3);
  for (int i = 0; i < 300; ++i) {
    const Graph g = rng.next(0, 11);
    EXPECT_EQ(count_maximal(g), count_maximal_oracle(g)) << to_graph6(g);
  }
}

TEST(Matching, AgreesWithOracleOnSparserLargerGraphs) {
  RandomGraphs rng(29);
  for (int i = 0; i < 150; ++i) {
    const Graph g = rng.next(12, 18);
    EXPECT_EQ(count_maximal(g, {Memo::On}), count_maximal_oracle(g)) << to_graph6(g);
  }
}

TEST(Matching, RestrictedCountsAtBlockedCutVertex) {
  // With the join vertex blocked each K5 still needs one of its own edges,
  // and any such edge dominates the attachment vertex: 10^3.
  const Graph g = star_join(1, {5, 5, 5});
  EXPECT_EQ(count_restricted(g, VertexSet::single(0), {}), 1000);
  EXPECT_EQ(BigInt(enumerate_restricted(g, VertexSet::single(0), {}).size()), 1000);
  // Forcing the join vertex to be covered: it picks one attachment edge (3
  // ways), which removes that clique; the other two contribute 6 each.
  EXPECT_EQ(count_restricted(g, {}, VertexSet::single(0)), 3 * 6 * 6);
}

TEST(Matching, EnumerationMatchesOracleExactly) {
  RandomGraphs rng(5);
  for (int i = 0; i < 100; ++i) {
    const Graph g = rng.next(1, 9);
    const auto ours = enumerate_maximal(g);
    EXPECT_EQ(ours, enumerate_maximal_oracle(g)) << to_graph6(g);
    for (const InducedMatching& m : ours) EXPECT_TRUE(is_maximal(g, m.edges));
    EXPECT_EQ(BigInt(ours.size()), count_maximal(g));
  }
}

TEST(Matching, StreamingVisitsEachOnce) {
  const Graph g = from_graph6("Dhc");
  std::vector<InducedMatching> seen;
  for_each_maximal(g, [&](const InducedMatching& m) { seen.push_back(m); });
  std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.edges < b.edges; });
  EXPECT_EQ(seen, enumerate_maximal(g));
}

TEST(Matching, InducedAndMaximalPredicates) {
  const Graph p5 = path_graph(5);
  const std::vector<Edge> both{{0, 1}, {3, 4}};
  const std::vector<Edge> middle{{1, 2}};
  const std::vector<Edge> first{{0, 1}};
  EXPECT_TRUE(is_induced_matching(p5, both));
  EXPECT_TRUE(is_maximal(p5, both));
  EXPECT_TRUE(is_maximal(p5, middle));
  EXPECT_TRUE(is_induced_matching(p5, first));
  EXPECT_FALSE(is_maximal(p5, first));

  const Graph c4 = cycle_graph(4);
  const std::vector<Edge> opposite{{0, 1}, {2, 3}};
  EXPECT_FALSE(is_induced_matching(c4, opposite));
  const std::vector<Edge> non_edge{{0, 2}};
  EXPECT_FALSE(is_induced_matching(c4, non_edge));
}

TEST(Matching, FormatAndNormalise) {
  const InducedMatching m = make_matching({{3, 2}, {1, 0}});
  EXPECT_EQ(format_matching(m), "0-1,2-3");
  EXPECT_EQ(m.covered.count(), 4u);
}

TEST(Matching, RestrictedCounts) {
  const Graph c5 = cycle_graph(5);
  VertexSet none;
  EXPECT_EQ(count_restricted(c5, none, none), 5);
  EXPECT_EQ(count_restricted(c5, none, VertexSet::single(0)), 2);
  EXPECT_EQ(count_restricted(c5, VertexSet::single(0), none), 3);
  EXPECT_EQ(enumerate_restricted(c5, VertexSet::single(0), none).front().edges, (std::vector<Edge>{{1, 2}}));
  EXPECT_THROW(count_restricted(c5, VertexSet::single(1), VertexSet::single(1)), GraphError);
  EXPECT_THROW(count_restricted(c5, VertexSet::single(7), none), GraphError);
}

TEST(Matching, RestrictedAgreesWithFilteredEnumeration) {
  RandomGraphs rng(17);
  for (int i = 0; i < 80; ++i) {
    const Graph g = rng.next(2, 9);
    const auto all = enumerate_maximal(g);
    const auto avoid = VertexSet::single(rng.uniform(0, g.order() - 1));
    const auto cover = VertexSet::single(rng.uniform(0, g.order() - 1));
    if (avoid == cover) continue;
    std::size_t expected = 0;
    for (const auto& m : all)
      if (!m.covered.intersects(avoid) && cover.subset_of(m.covered)) ++expected;
    EXPECT_EQ(count_restricted(g, avoid, cover), BigInt(expected)) << to_graph6(g);
  }
}

TEST(Matching, Maximum) {
  const MaximumCount k5 = count_maximum(complete_graph(5));
  EXPECT_EQ(k5.size, 1u);
  EXPECT_EQ(k5.count, 10);
  const MaximumCount p4 = count_maximum(path_graph(4));
  EXPECT_EQ(p4.size, 1u);
  EXPECT_EQ(p4.count, 3);
  const MaximumCount c6 = count_maximum(cycle_graph(6));
  EXPECT_EQ(c6.size, 2u);
  EXPECT_EQ(c6.count, 3);
  const MaximumCount e = count_maximum(Graph::from_edge_list(3, {}));
  EXPECT_EQ(e.size, 0u);
  EXPECT_EQ(e.count, 1);
}

TEST(Matching, MaximumAgreesWithEnumeration) {
  RandomGraphs rng(23);
  for (int i = 0; i < 80; ++i) {
    const Graph g = rng.next(1, 10);
    std::size_t best = 0;
    std::size_t n = 0;
    for (const auto& m : enumerate_maximal(g)) {
      if (m.size() > best) {
        best = m.size();
        n = 0;
      }
      if (m.size() == best) ++n;
    }
    const MaximumCount mc = count_maximum(g);
    EXPECT_EQ(mc.size, best);
    EXPECT_EQ(mc.count, BigInt(n));
  }
}

TEST(Matching, ClassifyVertex) {
  const VertexClassification k5 = classify_vertex(complete_graph(5), 0);
  EXPECT_EQ(k5.alpha, 4);
  EXPECT_EQ(k5.beta, 0);
  EXPECT_EQ(k5.theta, 6);
  EXPECT_EQ(k5.phi, 0);

  const VertexClassification c5 = classify_vertex(cycle_graph(5), 0);
  EXPECT_EQ(c5.alpha + c5.beta, 2);
  EXPECT_EQ(c5.theta + c5.phi, count_maximal(path_graph(4)));
}

}  // namespace
}  // namespace mimcount
