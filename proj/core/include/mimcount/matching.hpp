#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mimcount/bigint.hpp"
#include "mimcount/graph.hpp"

namespace mimcount {

/// A set of edges whose endpoints induce a 1-regular subgraph.
struct InducedMatching {
  std::vector<Edge> edges;  // sorted, each with u < v
  VertexSet covered;

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const InducedMatching&, const InducedMatching&) = default;
};

/// Normalises edge orientation and order and fills in the covered set.
InducedMatching make_matching(std::vector<Edge> edges);

/// "u-v,u-v,..." over the sorted edge list; the empty matching is "".
std::string format_matching(const InducedMatching& m);

bool is_induced_matching(const Graph& g, std::span<const Edge> edges);
/// Induced, and every edge of g has an endpoint in N[V(M)].
bool is_maximal(const Graph& g, std::span<const Edge> edges);

struct MaximumCount {
  std::size_t size = 0;
  BigInt count;
};

enum class Memo { Auto, On, Off };

struct CountOptions {
  /// Cache residual sub-problems per top-level call. Auto turns the cache on
  /// for graphs large enough to benefit.
  Memo memo = Memo::Auto;
};

/// |M_G| by branch-and-reduce on a maximum-degree vertex with component
/// splitting. The edgeless graph (including order 0) has exactly one
/// maximal induced matching, the empty one.
BigInt count_maximal(const Graph& g, const CountOptions& options = {});

/// Maximal induced matchings covering nothing in `avoid` and all of `cover`.
/// Throws GraphError when the two sets overlap or leave 0..n-1.
BigInt count_restricted(const Graph& g, const VertexSet& avoid, const VertexSet& cover,
                        const CountOptions& options = {});

/// Size of a maximum induced matching and the number attaining it.
MaximumCount count_maximum(const Graph& g, const CountOptions& options = {});

using MatchingVisitor = std::function<void(const InducedMatching&)>;

/// Streams every maximal induced matching exactly once in branching order
/// (deterministic, but not sorted).
void for_each_maximal(const Graph& g, const MatchingVisitor& visit);
void for_each_restricted(const Graph& g, const VertexSet& avoid, const VertexSet& cover,
                         const MatchingVisitor& visit);

/// All maximal induced matchings, sorted lexicographically by edge list.
std::vector<InducedMatching> enumerate_maximal(const Graph& g);
std::vector<InducedMatching> enumerate_restricted(const Graph& g, const VertexSet& avoid, const VertexSet& cover);

/// Independent count: maximal independent sets of the conflict graph on
/// E(G), where two edges conflict when they share an endpoint or are joined
/// by an edge. Enumerated with Tomita-style pivoting.
BigInt count_maximal_oracle(const Graph& g);
std::vector<InducedMatching> enumerate_maximal_oracle(const Graph& g);

/// alpha/beta split M_G(empty, {v}); theta/phi split M_{G-v}.
struct VertexClassification {
  BigInt alpha;  // covering v, and dropping v's edge is no longer maximal in G-v
  BigInt beta;   // covering v, and dropping v's edge stays maximal in G-v
  BigInt theta;  // maximal in G-v and maximal in G
  BigInt phi;    // maximal in G-v but not in G

  friend bool operator==(const VertexClassification&, const VertexClassification&) = default;
};

VertexClassification classify_vertex(const Graph& g, Vertex v);

}  // namespace mimcount
