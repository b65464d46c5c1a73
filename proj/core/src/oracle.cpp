// Conflict-graph oracle. Shares nothing with the branching engine beyond the
// Graph type: induced matchings of G are the independent sets of the
// conflict graph on E(G), so maximal ones are found with Bron-Kerbosch on
// the complement (the "compatible edges" graph).

#include <algorithm>
#include <bit>

#include "mimcount/matching.hpp"

namespace mimcount {

namespace {

/// Dynamic bitset over edge indices.
class EdgeBits {
 public:
  explicit EdgeBits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count_and(const EdgeBits& o) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    return c;
  }
  EdgeBits operator&(const EdgeBits& o) const {
    EdgeBits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
    return r;
  }
  EdgeBits minus(const EdgeBits& o) const {
    EdgeBits r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class MisEnumerator {
 public:
  explicit MisEnumerator(const Graph& g) : edges_(g.edges()) {
    const std::size_t m = edges_.size();
    compatible_.assign(m, EdgeBits(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Edge a = edges_[i];
        const Edge b = edges_[j];
        const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
        const bool joined = g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) || g.adjacent(a.v, b.u) ||
                            g.adjacent(a.v, b.v);
        if (!share && !joined) {
          compatible_[i].set(j);
          compatible_[j].set(i);
        }
      }
    }
  }

  template <class Emit>
  void run(Emit&& emit) {
    const std::size_t m = edges_.size();
    EdgeBits all(m);
    for (std::size_t i = 0; i < m; ++i) all.set(i);
    std::vector<std::size_t> chosen;
    expand(all, EdgeBits(m), chosen, emit);
  }

  const std::vector<Edge>& edges() const { return edges_; }

 private:
  template <class Emit>
  void expand(EdgeBits candidates, EdgeBits excluded, std::vector<std::size_t>& chosen, Emit& emit) {
    if (!candidates.any()) {
      if (!excluded.any()) emit(chosen);
      return;
    }
    // pivot maximising |candidates & compatible(pivot)|
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = candidates.count_and(compatible_[u]);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);

    const EdgeBits branch = candidates.minus(compatible_[pivot]);
    branch.for_each([&](std::size_t v) {
      chosen.push_back(v);
      expand(candidates & compatible_[v], excluded & compatible_[v], chosen, emit);
      chosen.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }

  std::vector<Edge> edges_;
  std::vector<EdgeBits> compatible_;
};

}  // namespace

BigInt count_maximal_oracle(const Graph& g) {
  MisEnumerator mis(g);
  std::uint64_t count = 0;
  mis.run([&](const std::vector<std::size_t>&) { ++count; });
  return BigInt(count);
}

std::vector<InducedMatching> enumerate_maximal_oracle(const Graph& g) {
  MisEnumerator mis(g);
  std::vector<InducedMatching> out;
  mis.run([&](const std::vector<std::size_t>& chosen) {
    std::vector<Edge> edges;
    edges.reserve(chosen.size());
    for (std::size_t i : chosen) edges.push_back(mis.edges()[i]);
    out.push_back(make_matching(std::move(edges)));
  });
  std::sort(out.begin(), out.end(),
            [](const InducedMatching& a, const InducedMatching& b) { return a.edges < b.edges; });
  return out;
}

}  // namespace mimcount
