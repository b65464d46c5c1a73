// Branch-and-reduce counting and enumeration of maximal induced matchings.
//
// A residual problem is a triple (F, X, T) over the vertices not yet
// dominated by the partial matching M:
//   F  free vertices that may still be covered by a future edge,
//   X  blocked vertices that must stay uncovered but whose incident edges
//      still need an endpoint in N[V(M)],
//   T  members of F that must end up covered,
//   D  members of X that must end up in N[V(M)].
// Branching on v in F either blocks v or covers it with an edge vp, which
// removes N[v] u N[p] from the residual. A residual with no edges left is a
// single solution, and independent components multiply.

#include <algorithm>
#include <unordered_map>

#include "mimcount/matching.hpp"

namespace mimcount {

namespace {

struct CountOverflow {};

/// uint64 count that throws instead of wrapping.
struct Checked {
  std::uint64_t v = 0;
};

Checked operator+(Checked a, Checked b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a.v, b.v, &r)) throw CountOverflow{};
  return {r};
}
Checked operator*(Checked a, Checked b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a.v, b.v, &r)) throw CountOverflow{};
  return {r};
}
bool is_zero(Checked a) { return a.v == 0; }
bool is_zero(const BigInt& a) { return a.is_zero(); }
BigInt widen(Checked a) { return BigInt(a.v); }
BigInt widen(const BigInt& a) { return a; }

template <class Count>
struct Counting {
  using Value = Count;
  static Value zero() { return Count{0}; }
  static Value one() { return Count{1}; }
  static bool dead(const Value& a) { return is_zero(a); }
  static Value plus(const Value& a, const Value& b) { return a + b; }
  static Value times(const Value& a, const Value& b) { return a * b; }
  static Value extend(const Value& a) { return a; }
};

/// (size of the largest matching, number of matchings of that size).
template <class Count>
struct Largest {
  struct Value {
    int size = -1;
    Count count{0};
  };
  static Value zero() { return {}; }
  static Value one() { return {0, Count{1}}; }
  static bool dead(const Value& a) { return a.size < 0; }
  static Value plus(const Value& a, const Value& b) {
    if (a.size != b.size) return a.size > b.size ? a : b;
    if (a.size < 0) return a;
    return {a.size, a.count + b.count};
  }
  static Value times(const Value& a, const Value& b) {
    if (a.size < 0 || b.size < 0) return zero();
    return {a.size + b.size, a.count * b.count};
  }
  static Value extend(const Value& a) {
    if (a.size < 0) return a;
    return {a.size + 1, a.count};
  }
};

template <class Set>
Set component_within(std::span<const Set> adj, const Set& region, std::size_t start) {
  Set comp = Set::single(start);
  Set frontier = comp;
  while (frontier.any()) {
    Set next;
    frontier.for_each([&](std::size_t v) { next |= adj[v]; });
    frontier = (next & region) - comp;
    comp |= frontier;
  }
  return comp;
}

/// Normalises a residual in place. Returns false when it has no completion.
template <class Set>
bool reduce(std::span<const Set> adj, Set& f, Set& x, const Set& t, Set& d) {
  // a free vertex without a free neighbour can never be covered
  for (;;) {
    Set stuck;
    f.for_each([&](std::size_t v) {
      if (!adj[v].intersects(f)) stuck.set(v);
    });
    if (stuck.none()) break;
    if (stuck.intersects(t)) return false;
    f -= stuck;
    x |= stuck;
  }
  // A blocked vertex without a free neighbour is never dominated, so each
  // of its remaining neighbours (all blocked) must be. Dropping it lets the
  // residual fall apart at blocked cut vertices.
  Set dead;
  x.for_each([&](std::size_t v) {
    if (!adj[v].intersects(f)) dead.set(v);
  });
  if (dead.intersects(d)) return false;
  const Set r = f | x;
  dead.for_each([&](std::size_t v) { d |= adj[v] & r; });
  if (dead.intersects(d)) return false;
  x -= dead;
  return true;
}

template <class Set>
std::size_t max_free_degree(std::span<const Set> adj, const Set& candidates, const Set& f) {
  std::size_t best = Set::kCapacity;
  std::size_t best_degree = 0;
  candidates.for_each([&](std::size_t v) {
    const std::size_t d = (adj[v] & f).count();
    if (best == Set::kCapacity || d > best_degree) {
      best = v;
      best_degree = d;
    }
  });
  return best;
}

// Forced vertices first. Otherwise work next to the blocked vertex with the
// fewest free neighbours: it is soon dominated or dead, and a dead blocked
// vertex drops out of the residual, which often disconnects it.
template <class Set>
std::size_t pick_pivot(std::span<const Set> adj, const Set& f, const Set& x, const Set& t, bool& may_skip) {
  const Set must = t & f;
  if (must.any()) {
    may_skip = false;
    return must.first();
  }
  may_skip = true;
  std::size_t anchor = Set::kCapacity;
  std::size_t fewest = 0;
  x.for_each([&](std::size_t v) {
    const std::size_t d = (adj[v] & f).count();
    if (anchor == Set::kCapacity || d < fewest) {
      anchor = v;
      fewest = d;
    }
  });
  if (anchor != Set::kCapacity) return max_free_degree(adj, adj[anchor] & f, f);
  return max_free_degree(adj, f, f);
}

template <class Set, class Semiring>
class Brancher {
 public:
  using Value = typename Semiring::Value;

  Brancher(std::vector<Set> adj, bool memo) : adj_(std::move(adj)), memo_(memo) {}

  Value run(Set f, Set x, Set t) { return solve(f, x, t, Set{}); }

 private:
  static constexpr std::size_t kMemoMinResidual = 12;

  struct Key {
    Set f, x, t, d;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return ((k.f.hash() * 31 + k.x.hash()) * 31 + k.t.hash()) * 31 + k.d.hash();
    }
  };

  Value solve(Set f, Set x, Set t, Set d) {
    const std::span<const Set> adj(adj_);
    if (!reduce(adj, f, x, t, d)) return Semiring::zero();
    if (f.none()) return x.none() ? Semiring::one() : Semiring::zero();

    const Set r = f | x;
    const Set first = component_within(adj, r, r.first());
    if (first != r) {
      Value acc = Semiring::one();
      Set rest = r;
      while (rest.any()) {
        const Set c = rest == r ? first : component_within(adj, r, rest.first());
        Value part = solve(f & c, x & c, t & c, d & c);
        if (Semiring::dead(part)) return Semiring::zero();
        acc = Semiring::times(acc, part);
        rest -= c;
      }
      return acc;
    }

    const bool cache = memo_ && r.count() >= kMemoMinResidual;
    if (cache) {
      auto it = cache_.find(Key{f, x, t, d});
      if (it != cache_.end()) return it->second;
    }

    bool may_skip = true;
    const std::size_t v = pick_pivot(adj, f, x, t, may_skip);
    Value total = Semiring::zero();
    if (may_skip) {
      Set f2 = f;
      Set x2 = x;
      f2.reset(v);
      x2.set(v);
      total = solve(f2, x2, t, d);
    }
    (adj[v] & f).for_each([&](std::size_t p) {
      Set pair = Set::single(v);
      pair.set(p);
      const Set closed = adj[v] | adj[p] | pair;
      if (((t & closed) - pair).any()) return;
      total = Semiring::plus(total, Semiring::extend(solve(f - closed, x - closed, t - pair, d - closed)));
    });

    if (cache) cache_.emplace(Key{f, x, t, d}, total);
    return total;
  }

  std::vector<Set> adj_;
  bool memo_;
  std::unordered_map<Key, Value, KeyHash> cache_;
};

template <class Set>
class Enumerator {
 public:
  Enumerator(std::vector<Set> adj, const MatchingVisitor& visit) : adj_(std::move(adj)), visit_(visit) {}

  void run(Set f, Set x, Set t, Set d = {}) {
    const std::span<const Set> adj(adj_);
    if (!reduce(adj, f, x, t, d)) return;
    if (f.none()) {
      if (x.none()) visit_(make_matching(stack_));
      return;
    }
    bool may_skip = true;
    const std::size_t v = pick_pivot(adj, f, x, t, may_skip);
    if (may_skip) {
      Set f2 = f;
      Set x2 = x;
      f2.reset(v);
      x2.set(v);
      run(f2, x2, t, d);
    }
    (adj[v] & f).for_each([&](std::size_t p) {
      Set pair = Set::single(v);
      pair.set(p);
      const Set closed = adj[v] | adj[p] | pair;
      if (((t & closed) - pair).any()) return;
      stack_.push_back(make_edge(static_cast<Vertex>(v), static_cast<Vertex>(p)));
      run(f - closed, x - closed, t - pair, d - closed);
      stack_.pop_back();
    });
  }

 private:
  std::vector<Set> adj_;
  const MatchingVisitor& visit_;
  std::vector<Edge> stack_;
};

template <class Set>
Set narrow(const VertexSet& s) {
  Set out;
  for (std::size_t w = 0; w < Set::kWords; ++w) out.set_word(w, s.word(w));
  return out;
}

template <class Set>
std::vector<Set> narrow_rows(const Graph& g) {
  std::vector<Set> rows;
  rows.reserve(g.order());
  for (const auto& r : g.rows()) rows.push_back(narrow<Set>(r));
  return rows;
}

bool use_memo(const Graph& g, const CountOptions& options) {
  switch (options.memo) {
    case Memo::On:
      return true;
    case Memo::Off:
      return false;
    case Memo::Auto:
      break;
  }
  return g.order() >= 20;
}

template <template <class> class Semiring, class Count>
auto branch(const Graph& g, const VertexSet& avoid, const VertexSet& cover, bool memo) {
  const VertexSet free = g.vertices() - avoid;
  if (g.order() <= 64) {
    using Small = BasicVertexSet<1>;
    Brancher<Small, Semiring<Count>> b(narrow_rows<Small>(g), memo);
    return b.run(narrow<Small>(free), narrow<Small>(avoid), narrow<Small>(cover));
  }
  Brancher<VertexSet, Semiring<Count>> b(std::vector<VertexSet>(g.rows().begin(), g.rows().end()), memo);
  return b.run(free, avoid, cover);
}

void check_restriction(const Graph& g, const VertexSet& avoid, const VertexSet& cover) {
  const VertexSet all = g.vertices();
  if (!avoid.subset_of(all) || !cover.subset_of(all)) throw GraphError("restriction set has vertices outside the graph");
  if (avoid.intersects(cover)) throw GraphError("avoid and cover sets must be disjoint");
}

BigInt count_impl(const Graph& g, const VertexSet& avoid, const VertexSet& cover, const CountOptions& options) {
  const bool memo = use_memo(g, options);
  try {
    return widen(branch<Counting, Checked>(g, avoid, cover, memo));
  } catch (const CountOverflow&) {
    return branch<Counting, BigInt>(g, avoid, cover, memo);
  }
}

}  // namespace

InducedMatching make_matching(std::vector<Edge> edges) {
  InducedMatching m;
  for (Edge& e : edges) {
    e = make_edge(e.u, e.v);
    m.covered.set(e.u);
    m.covered.set(e.v);
  }
  std::sort(edges.begin(), edges.end());
  m.edges = std::move(edges);
  return m;
}

std::string format_matching(const InducedMatching& m) {
  std::string out;
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(m.edges[i].u);
    out.push_back('-');
    out += std::to_string(m.edges[i].v);
  }
  return out;
}

bool is_induced_matching(const Graph& g, std::span<const Edge> edges) {
  VertexSet covered;
  for (Edge e : edges) {
    if (e.u >= g.order() || e.v >= g.order() || e.u == e.v) return false;
    if (!g.adjacent(e.u, e.v)) return false;
    if (covered.test(e.u) || covered.test(e.v)) return false;
    covered.set(e.u);
    covered.set(e.v);
  }
  bool ok = true;
  covered.for_each([&](std::size_t x) {
    if ((g.neighbors(static_cast<Vertex>(x)) & covered).count() != 1) ok = false;
  });
  return ok;
}

bool is_maximal(const Graph& g, std::span<const Edge> edges) {
  if (!is_induced_matching(g, edges)) return false;
  VertexSet covered;
  for (Edge e : edges) {
    covered.set(e.u);
    covered.set(e.v);
  }
  const VertexSet open = g.vertices() - closed_neighborhood(g, covered);
  bool ok = true;
  open.for_each([&](std::size_t y) {
    if (g.neighbors(static_cast<Vertex>(y)).intersects(open)) ok = false;
  });
  return ok;
}

BigInt count_maximal(const Graph& g, const CountOptions& options) { return count_impl(g, {}, {}, options); }

BigInt count_restricted(const Graph& g, const VertexSet& avoid, const VertexSet& cover, const CountOptions& options) {
  check_restriction(g, avoid, cover);
  return count_impl(g, avoid, cover, options);
}

MaximumCount count_maximum(const Graph& g, const CountOptions& options) {
  const bool memo = use_memo(g, options);
  auto finish = [](const auto& value) {
    return MaximumCount{static_cast<std::size_t>(value.size), widen(value.count)};
  };
  try {
    return finish(branch<Largest, Checked>(g, {}, {}, memo));
  } catch (const CountOverflow&) {
    return finish(branch<Largest, BigInt>(g, {}, {}, memo));
  }
}

void for_each_restricted(const Graph& g, const VertexSet& avoid, const VertexSet& cover, const MatchingVisitor& visit) {
  check_restriction(g, avoid, cover);
  const VertexSet free = g.vertices() - avoid;
  if (g.order() <= 64) {
    using Small = BasicVertexSet<1>;
    Enumerator<Small> e(narrow_rows<Small>(g), visit);
    e.run(narrow<Small>(free), narrow<Small>(avoid), narrow<Small>(cover));
    return;
  }
  Enumerator<VertexSet> e(std::vector<VertexSet>(g.rows().begin(), g.rows().end()), visit);
  e.run(free, avoid, cover);
}

void for_each_maximal(const Graph& g, const MatchingVisitor& visit) { for_each_restricted(g, {}, {}, visit); }

std::vector<InducedMatching> enumerate_restricted(const Graph& g, const VertexSet& avoid, const VertexSet& cover) {
  std::vector<InducedMatching> out;
  for_each_restricted(g, avoid, cover, [&](const InducedMatching& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(),
            [](const InducedMatching& a, const InducedMatching& b) { return a.edges < b.edges; });
  return out;
}

std::vector<InducedMatching> enumerate_maximal(const Graph& g) { return enumerate_restricted(g, {}, {}); }

}  // namespace mimcount
