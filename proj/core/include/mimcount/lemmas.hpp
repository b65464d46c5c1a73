#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mimcount/bigint.hpp"
#include "mimcount/graph.hpp"

namespace mimcount {

struct Counterexample {
  std::string graph6;
  std::string details;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct LemmaCheckResult {
  std::string lemma;
  std::uint64_t instances_tested = 0;
  std::uint64_t hypothesis_held = 0;
  std::uint64_t conclusion_held = 0;  // among instances whose hypothesis held
  /// Instances where the hypothesis failed and the conclusion failed too.
  /// Not a violation; it shows the hypothesis is needed.
  std::uint64_t unguarded_failures = 0;
  std::vector<Counterexample> counterexamples;
  std::optional<std::uint64_t> seed;

  bool passed() const { return conclusion_held == hypothesis_held && counterexamples.empty(); }
  LemmaCheckResult& operator+=(const LemmaCheckResult& o);
};

/// Sandwich |M_{G-v}| + alpha <= |M_G| <= |M_{G-v}| + sum_p |M_{G-N[v]-N[p]}|
/// at every vertex, with equality on the left iff beta = phi and on the
/// right iff phi = 0. One instance per vertex.
LemmaCheckResult check_sandwich(const Graph& g);

/// Base with K_r glued at v, so K_r is a pendant block with cutpoint v when
/// v has a neighbour in the base.
Graph attach_pendant_clique(const Graph& base, Vertex v, long r);

/// |M_G| = C(r-1,2) |M_{G-K_r}| + sum over p in N(v) of |M_{G-N[v]-N[p]}| for
/// G = attach_pendant_clique(base, v, r). Requires r >= 3.
LemmaCheckResult check_pendant_block(const Graph& base, Vertex v, long r);

struct RetwinInstance {
  bool hypothesis = false;  // no maximal M inside W1+W4 meeting W1, nor inside W3+W4 meeting W3
  BigInt count;             // |M_G|
  BigInt count_u_to_v;      // |M_{G_{u->v}}|, u made a twin of v
  BigInt count_v_to_u;      // |M_{G_{v->u}}|
};

/// Single-vertex (or whole twin class when `whole_class`) retwin at edge uv.
RetwinInstance evaluate_retwin(const Graph& g, Vertex u, Vertex v, bool whole_class = false);

/// Disjunctive retwin conclusion at edge uv whenever the hypothesis holds.
/// Throws GraphError when uv is not an edge.
LemmaCheckResult check_retwin(const Graph& g, Vertex u, Vertex v);
LemmaCheckResult check_retwin_class(const Graph& g, Vertex u, Vertex v);

/// Adding uv between non-adjacent false twins never lowers |M_G| and strictly
/// lowers tau. Throws GraphError when u, v are not non-adjacent false twins.
LemmaCheckResult check_false_twin_merge(const Graph& g, Vertex u, Vertex v);

/// G(n, p) with n uniform in [min_order, max_order] and p uniform in
/// [0.15, 0.85].
class RandomGraphs {
 public:
  explicit RandomGraphs(std::uint64_t seed) : engine_(seed) {}
  Graph next(std::size_t min_order, std::size_t max_order);
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t instances = 0;  // 0 picks the suite's default size
};

/// Seeded suites. Defaults: sandwich 500 graphs on 1..10 vertices plus every
/// named family up to order 11; pendant 200 bases on 1..8 vertices with
/// r in {3,4,5}; retwin 300 graphs on 2..9 vertices, every edge, both the
/// single-vertex and twin-class forms; falsetwin 200 graphs on 3..9
/// vertices with a planted false twin, plus every false-twin pair.
LemmaCheckResult run_sandwich_suite(const SuiteOptions& options);
LemmaCheckResult run_pendant_suite(const SuiteOptions& options);
LemmaCheckResult run_retwin_suite(const SuiteOptions& options);
LemmaCheckResult run_false_twin_suite(const SuiteOptions& options);

/// "sandwich", "pendant", "retwin", "falsetwin"; throws DomainError otherwise.
LemmaCheckResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace mimcount
