#include "mimcount/graph6.hpp"

namespace mimcount {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int sextet(char c, std::size_t pos) {
  const int b = static_cast<unsigned char>(c);
  if (b < kBias || b > kBias + 63) {
    throw ParseError("graph6: byte " + std::to_string(b) + " at offset " + std::to_string(pos) +
                     " outside the printable range 63..126");
  }
  return b - kBias;
}

}  // namespace

Graph from_graph6(std::string_view text, Graph6Diagnostics* diagnostics) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty record");
  if (text.front() == ':' || text.front() == ';') throw ParseError("graph6: sparse6 records are not supported");
  if (text.front() == '&') throw ParseError("graph6: digraph6 records are not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = static_cast<std::uint64_t>(sextet(text[0], 0));
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw ParseError("graph6: truncated 8-byte length prefix");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i], i));
    if (n < 258048) throw ParseError("graph6: non-canonical 8-byte length prefix");
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte length prefix");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text[i], i));
    if (n < 63) throw ParseError("graph6: non-canonical 4-byte length prefix");
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw GraphError("graph6: order " + std::to_string(n) + " exceeds the supported maximum of " +
                     std::to_string(kMaxVertices));
  }

  const std::size_t bits = static_cast<std::size_t>(n * (n - (n > 0 ? 1 : 0)) / 2);
  const std::size_t expected_bytes = (bits + 5) / 6;
  if (text.size() - pos != expected_bytes) {
    throw ParseError("graph6: order " + std::to_string(n) + " requires " + std::to_string(expected_bytes) +
                     " data bytes, record has " + std::to_string(text.size() - pos));
  }

  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6], pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text.back(), text.size() - 1);
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (diagnostics) diagnostics->nonzero_padding = (last & pad_mask) != 0;
  } else if (diagnostics) {
    diagnostics->nonzero_padding = false;
  }
  return Graph::from_adjacency(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const VertexSet& row = g.neighbors(static_cast<Vertex>(j));
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (row.test(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace mimcount
