#include "mimcount/lemmas.hpp"

#include <algorithm>
#include <sstream>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/formulas.hpp"
#include "mimcount/graph6.hpp"
#include "mimcount/matching.hpp"

namespace mimcount {

namespace {

BigInt neighbourhood_sum(const Graph& g, Vertex v) {
  BigInt sum = 0;
  const VertexSet nv = closed_neighborhood(g, v);
  g.neighbors(v).for_each([&](std::size_t p) {
    sum += count_maximal(remove_vertices(g, nv | closed_neighborhood(g, static_cast<Vertex>(p))));
  });
  return sum;
}

void record(LemmaCheckResult& r, bool hypothesis, bool conclusion, const Graph& g, const std::string& details) {
  ++r.instances_tested;
  if (hypothesis) {
    ++r.hypothesis_held;
    if (conclusion) ++r.conclusion_held;
    else r.counterexamples.push_back({to_graph6(g), details});
  } else if (!conclusion) {
    ++r.unguarded_failures;
  }
}

}  // namespace

LemmaCheckResult& LemmaCheckResult::operator+=(const LemmaCheckResult& o) {
  instances_tested += o.instances_tested;
  hypothesis_held += o.hypothesis_held;
  conclusion_held += o.conclusion_held;
  unguarded_failures += o.unguarded_failures;
  counterexamples.insert(counterexamples.end(), o.counterexamples.begin(), o.counterexamples.end());
  return *this;
}

LemmaCheckResult check_sandwich(const Graph& g) {
  LemmaCheckResult r;
  r.lemma = "sandwich";
  const BigInt total = count_maximal(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const BigInt without = count_maximal(remove_vertex(g, v));
    const VertexClassification c = classify_vertex(g, v);
    const BigInt lower = without + c.alpha;
    const BigInt upper = without + neighbourhood_sum(g, v);
    const bool ok = lower <= total && total <= upper && (lower == total) == (c.beta == c.phi) &&
                    (total == upper) == (c.phi == 0) && total == c.theta + c.alpha + c.beta &&
                    without == c.theta + c.phi;
    std::ostringstream d;
    d << "v=" << v << " |M_G|=" << total << " |M_G-v|=" << without << " upper=" << upper << " alpha=" << c.alpha
      << " beta=" << c.beta << " theta=" << c.theta << " phi=" << c.phi;
    record(r, true, ok, g, d.str());
  }
  return r;
}

Graph attach_pendant_clique(const Graph& base, Vertex v, long r) {
  base.check_vertex(v);
  if (r < 1) throw GraphError("clique size must be positive");
  const std::size_t n = base.order();
  std::vector<Edge> edges = base.edges();
  std::vector<Vertex> clique{v};
  for (long i = 1; i < r; ++i) clique.push_back(static_cast<Vertex>(n + static_cast<std::size_t>(i) - 1));
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j) edges.push_back(make_edge(clique[i], clique[j]));
  return Graph::from_edge_list(n + static_cast<std::size_t>(r) - 1, edges);
}

LemmaCheckResult check_pendant_block(const Graph& base, Vertex v, long r) {
  if (r < 3) throw DomainError("pendant clique needs r >= 3");
  LemmaCheckResult res;
  res.lemma = "pendant";
  const Graph g = attach_pendant_clique(base, v, r);
  VertexSet clique = VertexSet::single(v);
  for (std::size_t i = base.order(); i < g.order(); ++i) clique.set(i);

  const BlockDecomposition blocks = block_decomposition(g);
  const bool pendant =
      std::any_of(blocks.pendant_blocks.begin(), blocks.pendant_blocks.end(),
                  [&](const PendantBlock& b) { return blocks.blocks[b.block] == clique && b.cutpoint == v; });

  const BigInt lhs = count_maximal(g);
  const BigInt rhs = choose2(r - 1) * count_maximal(remove_vertices(g, clique)) + neighbourhood_sum(g, v);
  std::ostringstream d;
  d << "v=" << v << " r=" << r << " |M_G|=" << lhs << " identity=" << rhs;
  record(res, pendant, lhs == rhs, g, d.str());
  return res;
}

RetwinInstance evaluate_retwin(const Graph& g, Vertex u, Vertex v, bool whole_class) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.adjacent(u, v)) throw GraphError("retwin needs an edge uv");
  const VertexSet nu = closed_neighborhood(g, u);
  const VertexSet nv = closed_neighborhood(g, v);
  const VertexSet w1 = g.neighbors(u) - nv;
  const VertexSet w3 = g.neighbors(v) - nu;
  const VertexSet w4 = g.vertices() - (nu | nv);

  RetwinInstance out;
  bool blocked = false;
  for_each_maximal(g, [&](const InducedMatching& m) {
    if (m.covered.subset_of(w1 | w4) && m.covered.intersects(w1)) blocked = true;
    if (m.covered.subset_of(w3 | w4) && m.covered.intersects(w3)) blocked = true;
  });
  out.hypothesis = !blocked;
  out.count = count_maximal(g);
  if (whole_class) {
    out.count_u_to_v = count_maximal(retwin_class(g, u, v));
    out.count_v_to_u = count_maximal(retwin_class(g, v, u));
  } else {
    out.count_u_to_v = count_maximal(retwin(g, u, v));
    out.count_v_to_u = count_maximal(retwin(g, v, u));
  }
  return out;
}

namespace {

LemmaCheckResult check_retwin_impl(const Graph& g, Vertex u, Vertex v, bool whole_class) {
  LemmaCheckResult r;
  r.lemma = whole_class ? "retwin-class" : "retwin";
  const RetwinInstance inst = evaluate_retwin(g, u, v, whole_class);
  const bool holds = inst.count_u_to_v >= inst.count || inst.count_v_to_u >= inst.count;
  std::ostringstream d;
  d << "u=" << u << " v=" << v << " |M_G|=" << inst.count << " u->v " << inst.count_u_to_v << " v->u "
    << inst.count_v_to_u;
  record(r, inst.hypothesis, holds, g, d.str());
  return r;
}

}  // namespace

LemmaCheckResult check_retwin(const Graph& g, Vertex u, Vertex v) { return check_retwin_impl(g, u, v, false); }

LemmaCheckResult check_retwin_class(const Graph& g, Vertex u, Vertex v) {
  return check_retwin_impl(g, u, v, true);
}

LemmaCheckResult check_false_twin_merge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || g.adjacent(u, v) || !are_false_twins(g, u, v))
    throw GraphError("false-twin merge needs distinct non-adjacent vertices with equal neighbourhoods");
  LemmaCheckResult r;
  r.lemma = "falsetwin";
  const bool singletons = twin_set(g, u).count() == 1 && twin_set(g, v).count() == 1;
  const Graph merged = with_edge(g, u, v);
  const BigInt before = count_maximal(g);
  const BigInt after = count_maximal(merged);
  const std::size_t tau_before = tau(g);
  const std::size_t tau_after = tau(merged);
  std::ostringstream d;
  d << "u=" << u << " v=" << v << " count " << before << "->" << after << " tau " << tau_before << "->" << tau_after;
  record(r, singletons, after >= before && tau_after < tau_before, g, d.str());
  return r;
}

Graph RandomGraphs::next(std::size_t min_order, std::size_t max_order) {
  const std::size_t n = static_cast<std::size_t>(uniform(min_order, max_order));
  std::uniform_real_distribution<double> density(0.15, 0.85);
  std::bernoulli_distribution edge(density(engine_));
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (edge(engine_)) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  return Graph::from_edge_list(n, edges);
}

std::uint64_t RandomGraphs::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
}

namespace {

std::size_t or_default(std::size_t requested, std::size_t fallback) { return requested ? requested : fallback; }

std::vector<Graph> named_families_up_to(long max_order) {
  std::vector<Graph> out;
  for (long n = 1; n <= max_order; ++n) {
    out.push_back(build({Family::Complete, {n}}));
    out.push_back(build({Family::Path, {n}}));
    out.push_back(build({Family::F, {n}}));
    out.push_back(build({Family::ConjectureF, {n}}));
    if (n >= 3) out.push_back(build({Family::Cycle, {n}}));
    if (n <= 8) out.push_back(build({Family::FPrime, {n}}));
    if (n >= 8) out.push_back(build({Family::Q, {n}}));
  }
  for (long r = 1; r <= 6; ++r)
    for (long a = 1; a <= 6; ++a) {
      if (r + a <= max_order) out.push_back(star_join(r, {a}));
      for (long b = 1; b <= a; ++b)
        if (r + a + b <= max_order) out.push_back(star_join(r, {a, b}));
    }
  return out;
}

}  // namespace

LemmaCheckResult run_sandwich_suite(const SuiteOptions& o) {
  LemmaCheckResult total;
  total.lemma = "sandwich";
  total.seed = o.seed;
  RandomGraphs rng(o.seed);
  const std::size_t count = or_default(o.instances, 500);
  for (std::size_t i = 0; i < count; ++i) total += check_sandwich(rng.next(1, 10));
  for (const Graph& g : named_families_up_to(11)) total += check_sandwich(g);
  return total;
}

LemmaCheckResult run_pendant_suite(const SuiteOptions& o) {
  LemmaCheckResult total;
  total.lemma = "pendant";
  total.seed = o.seed;
  RandomGraphs rng(o.seed);
  const std::size_t count = or_default(o.instances, 200);
  std::size_t done = 0;
  while (done < count) {
    const Graph base = rng.next(2, 8);
    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < base.order(); ++v)
      if (base.degree(v) > 0) candidates.push_back(v);
    if (candidates.empty()) continue;
    const Vertex v = candidates[rng.uniform(0, candidates.size() - 1)];
    const long r = static_cast<long>(rng.uniform(3, 5));
    total += check_pendant_block(base, v, r);
    ++done;
  }
  return total;
}

LemmaCheckResult run_retwin_suite(const SuiteOptions& o) {
  LemmaCheckResult total;
  total.lemma = "retwin";
  total.seed = o.seed;
  RandomGraphs rng(o.seed);
  const std::size_t count = or_default(o.instances, 300);
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = rng.next(2, 9);
    for (Edge e : g.edges()) {
      total += check_retwin(g, e.u, e.v);
      total += check_retwin_class(g, e.u, e.v);
    }
  }
  return total;
}

LemmaCheckResult run_false_twin_suite(const SuiteOptions& o) {
  LemmaCheckResult total;
  total.lemma = "falsetwin";
  total.seed = o.seed;
  RandomGraphs rng(o.seed);
  const std::size_t count = or_default(o.instances, 200);
  for (std::size_t i = 0; i < count; ++i) {
    // Plant a copy w of a random vertex u with N(w) = N(u).
    const Graph h = rng.next(2, 8);
    const Vertex u = static_cast<Vertex>(rng.uniform(0, h.order() - 1));
    const Vertex w = static_cast<Vertex>(h.order());
    std::vector<Edge> edges = h.edges();
    h.neighbors(u).for_each([&](std::size_t p) { edges.push_back(make_edge(w, static_cast<Vertex>(p))); });
    const Graph g = Graph::from_edge_list(h.order() + 1, edges);
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b)
        if (!g.adjacent(a, b) && are_false_twins(g, a, b)) total += check_false_twin_merge(g, a, b);
  }
  return total;
}

LemmaCheckResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "sandwich") return run_sandwich_suite(options);
  if (name == "pendant") return run_pendant_suite(options);
  if (name == "retwin") return run_retwin_suite(options);
  if (name == "falsetwin") return run_false_twin_suite(options);
  throw DomainError("unknown lemma suite '" + name + "'");
}

}  // namespace mimcount
