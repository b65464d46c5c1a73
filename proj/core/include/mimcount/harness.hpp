#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mimcount/bigint.hpp"
#include "mimcount/formulas.hpp"
#include "mimcount/graph.hpp"

namespace mimcount {

struct SweepFilter {
  bool require_connected = false;
  std::optional<std::size_t> max_degree;
  bool exclude_regular = false;
  /// Expected order; when unset the first record fixes it.
  std::optional<std::size_t> order;

  bool accepts(const Graph& g) const;
};

enum class BoundKind { None, F, G, Q, I };
std::string to_string(BoundKind b);
/// "f", "g", "q", "I" (case-insensitive) or "none".
BoundKind parse_bound(std::string_view text);

struct VerdictTally {
  std::uint64_t strictly_below = 0;
  std::uint64_t at_exact_bound = 0;
  std::uint64_t above = 0;
  std::uint64_t unresolved = 0;

  friend bool operator==(const VerdictTally&, const VerdictTally&) = default;
};

struct RecordIssue {
  std::uint64_t line = 0;
  std::string graph6;   // empty for undecodable records
  std::string message;  // decode error, or the count for a bound violation

  friend bool operator==(const RecordIssue&, const RecordIssue&) = default;
};

struct SweepReport {
  std::optional<std::size_t> order;
  BoundKind bound = BoundKind::None;
  std::uint64_t records_read = 0;    // non-blank lines consumed
  std::uint64_t graphs_seen = 0;     // decoded with the expected order
  std::uint64_t graphs_counted = 0;  // passed the filter
  BigInt max_count = 0;
  std::vector<std::string> maximizers;  // sorted graph6
  VerdictTally tally;
  std::vector<RecordIssue> violations;  // Above verdicts, by line
  std::vector<RecordIssue> errors;      // malformed or wrong-order records, by line
  std::chrono::duration<double> elapsed{0};

  bool sound() const { return tally.above == 0; }
};

struct SweepOptions {
  SweepFilter filter;
  BoundKind bound = BoundKind::None;
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
  std::size_t batch_size = 8192;
  /// Checkpoint file; resumed from when it exists and matches the options.
  std::string checkpoint_path;
  std::uint64_t checkpoint_every = 1'000'000;
  /// Called with records_read roughly every `progress_every` records.
  std::function<void(std::uint64_t)> progress;
  std::uint64_t progress_every = 100'000;
};

/// Counts every record of a graph6 stream and certifies it against the
/// bound for its order. The report depends only on the input and the
/// filter/bound, never on `jobs` or batch size.
SweepReport sweep(std::istream& in, const SweepOptions& options);

/// Maximum count over non-regular graphs of order n with maximum degree <= x.
BigInt sweep_qnx(std::istream& in, std::size_t n, std::size_t x, unsigned jobs = 0);

/// Bound value for a single order. Throws DomainError where the bound is
/// undefined (f at n = 0, q below 8, BoundKind::None).
RadicalExpr bound_expr(BoundKind kind, std::size_t n);

}  // namespace mimcount
