#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mimcount {

/// Fixed-width vertex set over 0..Words*64-1. All operations are
/// word-parallel; Words == 1 is the fast path used for graphs of order <= 64.
template <std::size_t Words>
class BasicVertexSet {
  static_assert(Words >= 1);

 public:
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kCapacity = Words * 64;

  constexpr BasicVertexSet() = default;

  /// {0, 1, ..., n-1}
  static constexpr BasicVertexSet prefix(std::size_t n) {
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words && n > 0; ++w) {
      if (n >= 64) {
        s.words_[w] = ~std::uint64_t{0};
        n -= 64;
      } else {
        s.words_[w] = (std::uint64_t{1} << n) - 1;
        n = 0;
      }
    }
    return s;
  }

  static constexpr BasicVertexSet single(std::size_t v) {
    BasicVertexSet s;
    s.set(v);
    return s;
  }

  constexpr bool test(std::size_t v) const {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  constexpr void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  constexpr bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  constexpr bool none() const { return !any(); }

  constexpr std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Smallest member, or kCapacity when empty.
  constexpr std::size_t first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kCapacity;
  }

  constexpr bool intersects(const BasicVertexSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  constexpr bool subset_of(const BasicVertexSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr BasicVertexSet& operator^=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator^(BasicVertexSet a, const BasicVertexSet& b) { return a ^= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;
  /// Orders by the integer value of the bit pattern.
  friend constexpr std::strong_ordering operator<=>(const BasicVertexSet& a, const BasicVertexSet& b) {
    for (std::size_t w = Words; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }
  constexpr void set_word(std::size_t w, std::uint64_t bits) { words_[w] = bits; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

inline constexpr std::size_t kMaxVertices = 256;
using VertexSet = BasicVertexSet<kMaxVertices / 64>;

}  // namespace mimcount

template <std::size_t W>
struct std::hash<mimcount::BasicVertexSet<W>> {
  std::size_t operator()(const mimcount::BasicVertexSet<W>& s) const noexcept { return s.hash(); }
};
