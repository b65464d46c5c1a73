#include "mimcount/graph.hpp"

#include <algorithm>
#include <sstream>

namespace mimcount {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  }
}

}  // namespace

void Graph::check_vertex(Vertex v) const {
  if (v >= rows_.size()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(rows_.size()));
  }
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> rows(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    rows[e.u].set(e.v);
    rows[e.v].set(e.u);
  }
  Graph g;
  g.rows_ = std::move(rows);
  std::size_t degree_sum = 0;
  for (const auto& r : g.rows_) degree_sum += r.count();
  g.edge_count_ = degree_sum / 2;
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const std::size_t n = rows.size();
  check_order(n);
  const VertexSet all = VertexSet::prefix(n);
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!rows[v].subset_of(all)) throw GraphError("adjacency row " + std::to_string(v) + " has bits beyond n");
    if (rows[v].test(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    rows[v].for_each([&](std::size_t u) {
      if (!rows[u].test(v)) throw GraphError("adjacency is not symmetric at (" + std::to_string(v) + "," +
                                             std::to_string(u) + ")");
    });
    degree_sum += rows[v].count();
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    });
  }
  return out;
}

VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  s.for_each([&](std::size_t v) { out |= g.neighbors(static_cast<Vertex>(v)); });
  return out;
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (const auto& r : g.rows()) best = std::max(best, r.count());
  return best;
}

bool is_regular(const Graph& g) {
  auto rows = g.rows();
  if (rows.empty()) return true;
  const std::size_t d = rows.front().count();
  return std::all_of(rows.begin(), rows.end(), [d](const VertexSet& r) { return r.count() == d; });
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const VertexSet kept = keep & g.vertices();
  std::vector<Vertex> new_id(g.order(), 0);
  std::vector<Vertex> old_id;
  kept.for_each([&](std::size_t v) {
    new_id[v] = static_cast<Vertex>(old_id.size());
    old_id.push_back(static_cast<Vertex>(v));
  });
  std::vector<VertexSet> rows(old_id.size());
  for (std::size_t i = 0; i < old_id.size(); ++i) {
    (g.neighbors(old_id[i]) & kept).for_each([&](std::size_t u) { rows[i].set(new_id[u]); });
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph remove_vertices(const Graph& g, const VertexSet& s) { return induced_subgraph(g, g.vertices() - s); }

Graph remove_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return remove_vertices(g, VertexSet::single(v));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (Edge e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edge_list(a.order() + b.order(), edges);
}

Graph with_edge(const Graph& g, Vertex a, Vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  rows[a].set(b);
  rows[b].set(a);
  return Graph::from_adjacency(std::move(rows));
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (Edge e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: expected header \"n m\"");
  if (static_cast<unsigned long long>(n) > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds the supported maximum");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing data after " + std::to_string(m) + " edges");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

}  // namespace mimcount
