#include "mimcount/matching.hpp"

namespace mimcount {

namespace {

/// Maximality of `edges` in G - v, evaluated on G itself: every edge of G not
/// incident to v needs an endpoint in N[V(M)].
bool maximal_without(const Graph& g, Vertex v, const std::vector<Edge>& edges) {
  VertexSet covered;
  for (Edge e : edges) {
    covered.set(e.u);
    covered.set(e.v);
  }
  VertexSet open = g.vertices() - closed_neighborhood(g, covered);
  open.reset(v);
  bool ok = true;
  open.for_each([&](std::size_t y) {
    if (g.neighbors(static_cast<Vertex>(y)).intersects(open)) ok = false;
  });
  return ok;
}

}  // namespace

VertexClassification classify_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  VertexClassification out;

  for_each_restricted(g, {}, VertexSet::single(v), [&](const InducedMatching& m) {
    std::vector<Edge> rest;
    rest.reserve(m.edges.size());
    for (Edge e : m.edges)
      if (e.u != v && e.v != v) rest.push_back(e);
    if (maximal_without(g, v, rest)) ++out.beta;
    else ++out.alpha;
  });

  std::vector<Vertex> original;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) original.push_back(u);
  const Graph h = remove_vertex(g, v);
  for_each_maximal(h, [&](const InducedMatching& m) {
    std::vector<Edge> lifted;
    lifted.reserve(m.edges.size());
    for (Edge e : m.edges) lifted.push_back(make_edge(original[e.u], original[e.v]));
    if (is_maximal(g, lifted)) ++out.theta;
    else ++out.phi;
  });
  return out;
}

}  // namespace mimcount
