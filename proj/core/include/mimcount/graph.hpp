#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mimcount/bitset.hpp"
#include "mimcount/errors.hpp"

namespace mimcount {

using Vertex = std::uint32_t;

/// Undirected edge, normalised so that u < v by the constructors that
/// produce edge lists.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Immutable simple undirected graph on vertices 0..order()-1 stored as
/// bit-set adjacency rows. Order 0 is legal everywhere.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges are accepted; self-loops and out-of-range ids throw.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Rows must be symmetric, irreflexive and confined to 0..n-1.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return rows_[v];
  }
  bool adjacent(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return rows_[a].test(b);
  }
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }

  /// {0..n-1}
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  /// All edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  std::span<const VertexSet> rows() const { return rows_; }

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

VertexSet open_neighborhood(const Graph& g, Vertex v);
VertexSet closed_neighborhood(const Graph& g, Vertex v);
/// N[S] = union of closed neighbourhoods of members of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
std::size_t degree(const Graph& g, Vertex v);
std::size_t max_degree(const Graph& g);
bool is_regular(const Graph& g);

/// G[keep], vertices relabelled in ascending order of their original ids.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
/// G - S.
Graph remove_vertices(const Graph& g, const VertexSet& s);
Graph remove_vertex(const Graph& g, Vertex v);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph with_edge(const Graph& g, Vertex a, Vertex b);

/// Connected components ordered by smallest vertex id.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

struct PendantBlock {
  std::size_t block = 0;  // index into BlockDecomposition::blocks
  Vertex cutpoint = 0;
};

struct BlockDecomposition {
  VertexSet cutpoints;
  /// Maximal 2-connected vertex sets (bridges and isolated vertices are
  /// blocks too), ordered by smallest member and then by size.
  std::vector<VertexSet> blocks;
  std::vector<PendantBlock> pendant_blocks;
};

/// Works per component on disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

/// T_G(v): v together with every u with N[u] = N[v].
VertexSet twin_set(const Graph& g, Vertex v);
/// Number of twin classes.
std::size_t tau(const Graph& g);
bool are_twins(const Graph& g, Vertex a, Vertex b);
/// N(a) = N(b) (open neighbourhoods). A vertex is not its own false twin.
bool are_false_twins(const Graph& g, Vertex a, Vertex b);

/// G_{v->u}: drop vx for x in N(v) \ N[u], add vy for y in N(u) \ N[v].
/// Requires uv to be an edge.
Graph retwin(const Graph& g, Vertex v, Vertex u);
/// G_{T_G(v)->u}: every member of T_G(v) becomes a twin of u.
Graph retwin_class(const Graph& g, Vertex v, Vertex u);

/// "n m" header followed by m lines "u v".
std::string to_edge_list_text(const Graph& g);
Graph from_edge_list_text(const std::string& text);

}  // namespace mimcount
