#include <gtest/gtest.h>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/matching.hpp"

namespace mimcount {
namespace {

FamilySpec spec(Family f, long n) { return {f, {n}}; }

TEST(Families, BasicShapes) {
  EXPECT_EQ(complete_graph(6).edge_count(), 15u);
  EXPECT_EQ(cycle_graph(7).edge_count(), 7u);
  EXPECT_EQ(path_graph(7).edge_count(), 6u);
  EXPECT_EQ(path_graph(0).order(), 0u);
  EXPECT_THROW(cycle_graph(2), DomainError);
  EXPECT_THROW(clique_union({3, 0}), DomainError);
  EXPECT_THROW(star_join(0, {3}), DomainError);
}

TEST(Families, StarJoinLayout) {
  const Graph g = star_join(3, {2, 4});
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(g.edge_count(), 3u + 1u + 6u + 2u);
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_TRUE(g.adjacent(0, 5));
  EXPECT_FALSE(g.adjacent(0, 4));
  EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(Families, FAttainsF) {
  for (long n : {1L, 2L, 5L, 8L, 9L, 12L, 13L, 16L, 21L, 26L, 31L, 36L, 61L, 121L, 251L}) {
    const FamilySpec s = spec(Family::F, n);
    const Graph g = build(s);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(n));
    const BoundValue b = expected_count(s);
    if (n == 1) {
      // The closed form gives 0 at n = 1 while K1 has the empty matching.
      EXPECT_EQ(b.exact, BigInt(0));
      EXPECT_EQ(count_maximal(g), 1);
      continue;
    }
    EXPECT_EQ(b.exact, count_maximal(g)) << n;
  }
}

TEST(Families, FUndefinedOrders) {
  EXPECT_THROW(build(spec(Family::F, 14)), DomainError);
  EXPECT_THROW(build(spec(Family::F, 0)), DomainError);
  EXPECT_THROW(build(spec(Family::FPrime, 16)), DomainError);
  EXPECT_THROW(expected_count(spec(Family::FPrime, 9)), DomainError);
  EXPECT_THROW(build(spec(Family::Q, 7)), DomainError);
  EXPECT_THROW(expected_count(spec(Family::Complete, 5)), DomainError);
  EXPECT_THROW(build(FamilySpec{Family::F, {9, 2}}), DomainError);
}

TEST(Families, FPrimeAtLargeOrders) {
  const Graph g = build(spec(Family::FPrime, 31));
  EXPECT_EQ(count_maximal(g), expected_count(spec(Family::FPrime, 31)).exact.value());
  EXPECT_EQ(count_maximum(g).size, 6u);
}

TEST(Families, QAttainsQ) {
  for (long n = 8; n <= 22; ++n) {
    const FamilySpec s = spec(Family::Q, n);
    const Graph g = build(s);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(n));
    EXPECT_EQ(count_maximal(g), expected_count(s).exact.value()) << n;
  }
}

TEST(Families, ConjectureFamilyAttainsI) {
  for (long n = 14; n <= 120; ++n) {
    const FamilySpec s = spec(Family::ConjectureF, n);
    const Graph g = build(s);
    EXPECT_EQ(g.order(), static_cast<std::size_t>(n));
    const BoundValue b = expected_count(s);
    ASSERT_TRUE(b.exact.has_value()) << n;
    EXPECT_EQ(count_maximal(g), *b.exact) << n;
  }
}

TEST(Families, ParseAndFormat) {
  EXPECT_EQ(parse_family("K:5"), spec(Family::Complete, 5));
  EXPECT_EQ(parse_family("Fp:36"), spec(Family::FPrime, 36));
  EXPECT_EQ(parse_family("conjF:17"), spec(Family::ConjectureF, 17));
  const FamilySpec s = parse_family("star:4/5,5");
  EXPECT_EQ(s.family, Family::StarJoin);
  EXPECT_EQ(s.params, (std::vector<long>{4, 5, 5}));
  for (const char* text : {"K:5", "C:9", "P:3", "F:21", "Fp:31", "Q:12", "conjF:19", "star:4/5,5", "star:3"})
    EXPECT_EQ(format_family(parse_family(text)), text);
}

TEST(Families, ParseErrors) {
  for (const char* text : {"", "K", "K:", "K:x", "X:5", "star:4/", "star:4/5,", "K:5z", "K:-"})
    EXPECT_THROW(parse_family(text), ParseError) << text;
}

}  // namespace
}  // namespace mimcount
