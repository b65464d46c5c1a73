#include <gtest/gtest.h>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/graph6.hpp"
#include "mimcount/lemmas.hpp"

namespace mimcount {
namespace {

TEST(Graph6, KnownEncodings) {
  // Reference strings produced by an independent encoder.
  EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(to_graph6(complete_graph(8)), "G~~~~{");
  EXPECT_EQ(to_graph6(complete_graph(1)), "@");
  EXPECT_EQ(to_graph6(Graph{}), "?");
}

TEST(Graph6, Decodes) {
  EXPECT_EQ(from_graph6("D~{"), complete_graph(5));
  EXPECT_EQ(from_graph6("Dhc"), cycle_graph(5));
  EXPECT_EQ(from_graph6("@").order(), 1u);
  EXPECT_EQ(from_graph6("?").order(), 0u);
}

TEST(Graph6, HeaderAndWhitespace) {
  EXPECT_EQ(from_graph6(">>graph6<<D~{"), complete_graph(5));
  EXPECT_EQ(from_graph6("  Bg\r\n"), path_graph(3));
}

TEST(Graph6, LongSizePrefix) {
  const Graph e63 = Graph::from_edge_list(63, {});
  const std::string s = to_graph6(e63);
  EXPECT_EQ(s.substr(0, 4), "~??~");
  EXPECT_EQ(from_graph6(s), e63);
  const Graph c100 = cycle_graph(100);
  EXPECT_EQ(from_graph6(to_graph6(c100)), c100);
}

TEST(Graph6, RoundTripsRandomGraphs) {
  RandomGraphs rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = rng.next(0, 40);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("D~"), ParseError);     // too short
  EXPECT_THROW(from_graph6("D~{?"), ParseError);   // too long
  EXPECT_THROW(from_graph6("D~\x7f"), ParseError); // byte out of range
  EXPECT_THROW(from_graph6(":Fa@x^"), ParseError); // sparse6
  EXPECT_THROW(from_graph6("&DI?AO?"), ParseError);  // digraph6
}

TEST(Graph6, TooManyVertices) {
  // Long form announcing 364 vertices.
  EXPECT_THROW(from_graph6("~?Dk"), GraphError);
}

TEST(Graph6, NonzeroPaddingIsReported) {
  // P3 is "Bg"; the last 6-bit group has three padding bits. Setting one
  // keeps the graph but raises the diagnostic.
  Graph6Diagnostics d;
  EXPECT_EQ(from_graph6("Bh", &d), path_graph(3));
  EXPECT_TRUE(d.nonzero_padding);
  Graph6Diagnostics clean;
  from_graph6("Bg", &clean);
  EXPECT_FALSE(clean.nonzero_padding);
}

}  // namespace
}  // namespace mimcount
