#pragma once

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <streambuf>
#include <string>
#include <vector>

#include "mimcount/graph.hpp"

namespace mimcount::testing {

/// Reads the standard output of a shell command as an istream.
class PipeStream : public std::istream {
 public:
  explicit PipeStream(const std::string& command) : std::istream(nullptr), buf_(command) { rdbuf(&buf_); }

  /// Exit status of the command; only valid once the stream is drained.
  int close() { return buf_.close(); }

 private:
  class Buf : public std::streambuf {
   public:
    explicit Buf(const std::string& command) : pipe_(popen(command.c_str(), "r")) {
      if (!pipe_) throw std::runtime_error("cannot run " + command);
    }
    ~Buf() override { close(); }

    int close() {
      if (!pipe_) return status_;
      status_ = pclose(pipe_);
      pipe_ = nullptr;
      return status_;
    }

   protected:
    int_type underflow() override {
      if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
      if (!pipe_) return traits_type::eof();
      const std::size_t n = std::fread(data_, 1, sizeof data_, pipe_);
      if (n == 0) return traits_type::eof();
      setg(data_, data_, data_ + n);
      return traits_type::to_int_type(*gptr());
    }

   private:
    FILE* pipe_ = nullptr;
    int status_ = -1;
    char data_[1 << 16];
  };

  Buf buf_;
};

inline std::string geng_command(const std::string& flags) { return std::string(MIMCOUNT_GENG) + " -q " + flags; }

/// Backtracking isomorphism test; fine for the handful of small graphs the
/// tests compare.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (Vertex v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        ok = a.adjacent(u, v) == b.adjacent(static_cast<Vertex>(map[u]), w);
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(extend, 0);
}

}  // namespace mimcount::testing
