#include <gtest/gtest.h>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/graph.hpp"
#include "mimcount/matching.hpp"

namespace mimcount {
namespace {

Graph p3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }

TEST(Graph, EmptyGraphIsLegal) {
  const Graph g;
  EXPECT_EQ(g.order(), 0u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(components(g).empty());
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(tau(g), 0u);
  EXPECT_TRUE(block_decomposition(g).blocks.empty());
}

TEST(Graph, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(Graph::from_edge_list(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::from_edge_list(kMaxVertices + 1, {}), GraphError);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g = Graph::from_edge_list(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, AdjacencyRowsMustBeSymmetric) {
  std::vector<VertexSet> rows(2);
  rows[0].set(1);
  EXPECT_THROW(Graph::from_adjacency(rows), GraphError);
  rows[1].set(0);
  EXPECT_EQ(Graph::from_adjacency(rows).edge_count(), 1u);
}

TEST(Graph, Neighbourhoods) {
  const Graph g = p3();
  EXPECT_EQ(open_neighborhood(g, 1).to_vector(), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(closed_neighborhood(g, 0).to_vector(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(degree(g, 1), 2u);
  EXPECT_EQ(max_degree(g), 2u);
  EXPECT_FALSE(is_regular(g));
  EXPECT_TRUE(is_regular(cycle_graph(5)));
  EXPECT_THROW(g.neighbors(3), GraphError);
}

TEST(Graph, InducedSubgraphRelabelsAscending) {
  const Graph c5 = cycle_graph(5);
  VertexSet keep;
  keep.set(1);
  keep.set(2);
  keep.set(4);
  const Graph h = induced_subgraph(c5, keep);
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(remove_vertex(c5, 0).edges(), path_graph(4).edges());
}

TEST(Graph, DisjointUnionAndWithEdge) {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(2));
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(components(g).size(), 2u);
  const Graph h = with_edge(g, 2, 3);
  EXPECT_TRUE(is_connected(h));
  EXPECT_THROW(with_edge(g, 1, 1), GraphError);
}

TEST(Graph, ComponentsOrderedBySmallestVertex) {
  const Graph g = Graph::from_edge_list(6, {{4, 5}, {0, 3}});
  const auto comps = components(g);
  ASSERT_EQ(comps.size(), 4u);
  EXPECT_EQ(comps[0].to_vector(), (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(comps[1].to_vector(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(comps[3].to_vector(), (std::vector<std::size_t>{4, 5}));
}

TEST(Graph, BlocksOfStarJoin) {
  // K4*K4: the join vertex and its attachment are both cutpoints, with the
  // bridge between them as a third block.
  const Graph g = star_join(4, {4});
  const BlockDecomposition b = block_decomposition(g);
  EXPECT_EQ(b.cutpoints.to_vector(), (std::vector<std::size_t>{0, 4}));
  ASSERT_EQ(b.blocks.size(), 3u);
  EXPECT_EQ(b.pendant_blocks.size(), 2u);
  for (const PendantBlock& p : b.pendant_blocks) EXPECT_EQ(b.blocks[p.block].count(), 4u);
}

TEST(Graph, BlocksOfCycleAndPath) {
  const auto c = block_decomposition(cycle_graph(6));
  EXPECT_EQ(c.blocks.size(), 1u);
  EXPECT_TRUE(c.cutpoints.none());
  EXPECT_TRUE(c.pendant_blocks.empty());

  const auto p = block_decomposition(path_graph(4));
  EXPECT_EQ(p.blocks.size(), 3u);
  EXPECT_EQ(p.cutpoints.to_vector(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(p.pendant_blocks.size(), 2u);
}

TEST(Graph, StarJoinRemovingJoinVertexSeparatesParts) {
  const Graph g = star_join(6, {5, 5});
  EXPECT_EQ(g.order(), 16u);
  EXPECT_EQ(degree(g, 0), 5u + 2u);
  EXPECT_TRUE(block_decomposition(g).cutpoints.test(0));
  EXPECT_EQ(components(remove_vertex(g, 0)).size(), 3u);
}

TEST(Graph, TwinsAndTau) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(tau(k4), 1u);
  EXPECT_EQ(twin_set(k4, 2).count(), 4u);
  EXPECT_TRUE(are_twins(k4, 0, 3));

  const Graph p = p3();
  EXPECT_EQ(tau(p), 3u);
  EXPECT_TRUE(are_false_twins(p, 0, 2));
  EXPECT_FALSE(are_twins(p, 0, 2));
  EXPECT_EQ(tau(with_edge(p, 0, 2)), 1u);
}

TEST(Graph, RetwinMakesTwins) {
  const Graph c5 = cycle_graph(5);
  const Graph h = retwin(c5, 1, 0);  // 1 takes N[0]
  EXPECT_TRUE(are_twins(h, 0, 1));
  EXPECT_EQ(count_maximal(h), 4);
  EXPECT_EQ(count_maximal(retwin(c5, 0, 1)), 4);
  EXPECT_LT(tau(h), tau(c5));
}

TEST(Graph, RetwinRejectsNonEdges) {
  const Graph c5 = cycle_graph(5);
  EXPECT_THROW(retwin(c5, 0, 2), GraphError);
  EXPECT_THROW(retwin(c5, 1, 1), GraphError);
}

TEST(Graph, RetwinOfTwinsIsIdentity) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(retwin(k4, 0, 1), k4);
  EXPECT_EQ(retwin_class(k4, 0, 1), k4);
}

TEST(Graph, RetwinClassMovesWholeClass) {
  // 0 and 1 are twins; both take N[2].
  const Graph g = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}});
  ASSERT_TRUE(are_twins(g, 0, 1));
  const Graph h = retwin_class(g, 0, 2);
  EXPECT_TRUE(are_twins(h, 0, 2));
  EXPECT_TRUE(are_twins(h, 1, 2));
  EXPECT_LT(tau(h), tau(g));
}

TEST(Graph, EdgeListTextRoundTrip) {
  const Graph g = star_join(3, {2, 1});
  EXPECT_EQ(from_edge_list_text(to_edge_list_text(g)), g);
  EXPECT_EQ(to_edge_list_text(p3()), "3 2\n0 1\n1 2\n");
  EXPECT_THROW(from_edge_list_text("3"), ParseError);
  EXPECT_THROW(from_edge_list_text("3 1\n0 5\n"), GraphError);
  EXPECT_THROW(from_edge_list_text("3 1\n0 1\n1 2\n"), ParseError);
}

TEST(Graph, WideGraphsUseAllWords) {
  const Graph g = cycle_graph(200);
  EXPECT_EQ(g.edge_count(), 200u);
  EXPECT_TRUE(g.adjacent(199, 0));
  EXPECT_TRUE(is_regular(g));
  EXPECT_EQ(block_decomposition(g).blocks.size(), 1u);
}

}  // namespace
}  // namespace mimcount
