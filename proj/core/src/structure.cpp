// Components, blocks, twin classes and the retwin transformation.

#include <algorithm>
#include <functional>

#include "mimcount/graph.hpp"

namespace mimcount {

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen.any()) {
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (frontier.any()) {
      VertexSet next;
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(static_cast<Vertex>(v)); });
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(Vertex, int)> dfs = [&](Vertex v, int parent) {
    disc[v] = low[v] = timer++;
    g.neighbors(v).for_each([&](std::size_t wi) {
      const auto w = static_cast<Vertex>(wi);
      if (disc[w] == -1) {
        stack.push_back({v, w});
        dfs(w, static_cast<int>(v));
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          VertexSet block;
          for (;;) {
            Edge e = stack.back();
            stack.pop_back();
            block.set(e.u);
            block.set(e.v);
            if (e.u == v && e.v == w) break;
          }
          out.blocks.push_back(block);
        }
      } else if (static_cast<int>(w) != parent && disc[w] < disc[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], disc[w]);
      }
    });
  };

  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] != -1) continue;
    if (g.neighbors(v).none()) {
      disc[v] = timer++;
      out.blocks.push_back(VertexSet::single(v));
      continue;
    }
    dfs(v, -1);
  }
  // a vertex is a cutpoint iff it lies in two or more blocks
  std::vector<int> membership(n, 0);
  for (const auto& b : out.blocks) b.for_each([&](std::size_t v) { ++membership[v]; });
  for (std::size_t v = 0; v < n; ++v)
    if (membership[v] >= 2) out.cutpoints.set(v);

  std::sort(out.blocks.begin(), out.blocks.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.first() != b.first()) return a.first() < b.first();
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    const VertexSet cuts = out.blocks[i] & out.cutpoints;
    if (cuts.count() == 1) out.pendant_blocks.push_back({i, static_cast<Vertex>(cuts.first())});
  }
  return out;
}

VertexSet twin_set(const Graph& g, Vertex v) {
  const VertexSet nv = closed_neighborhood(g, v);
  VertexSet out;
  for (Vertex u = 0; u < g.order(); ++u)
    if (closed_neighborhood(g, u) == nv) out.set(u);
  return out;
}

std::size_t tau(const Graph& g) {
  std::vector<VertexSet> classes;
  classes.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) classes.push_back(closed_neighborhood(g, v));
  std::sort(classes.begin(), classes.end());
  return static_cast<std::size_t>(std::unique(classes.begin(), classes.end()) - classes.begin());
}

bool are_twins(const Graph& g, Vertex a, Vertex b) { return closed_neighborhood(g, a) == closed_neighborhood(g, b); }

bool are_false_twins(const Graph& g, Vertex a, Vertex b) {
  g.check_vertex(a);
  g.check_vertex(b);
  return a != b && g.neighbors(a) == g.neighbors(b);
}

Graph retwin(const Graph& g, Vertex v, Vertex u) {
  g.check_vertex(v);
  g.check_vertex(u);
  if (u == v) throw GraphError("retwin requires two distinct vertices");
  if (!g.adjacent(u, v)) {
    throw GraphError("retwin requires an edge: " + std::to_string(u) + " and " + std::to_string(v) +
                     " are not adjacent");
  }
  std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
  const VertexSet nu = closed_neighborhood(g, u);
  const VertexSet nv = closed_neighborhood(g, v);
  (g.neighbors(v) - nu).for_each([&](std::size_t x) { rows[x].reset(v); });
  (g.neighbors(u) - nv).for_each([&](std::size_t y) { rows[y].set(v); });
  rows[v] = nu;
  rows[v].reset(v);
  return Graph::from_adjacency(std::move(rows));
}

Graph retwin_class(const Graph& g, Vertex v, Vertex u) {
  g.check_vertex(v);
  g.check_vertex(u);
  if (u == v) throw GraphError("retwin requires two distinct vertices");
  if (!g.adjacent(u, v)) {
    throw GraphError("retwin requires an edge: " + std::to_string(u) + " and " + std::to_string(v) +
                     " are not adjacent");
  }
  const VertexSet cls = twin_set(g, v);
  if (cls.test(u)) return g;
  Graph out = g;
  cls.for_each([&](std::size_t w) { out = retwin(out, static_cast<Vertex>(w), u); });
  return out;
}

}  // namespace mimcount
