#include "mimcount/harness.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <thread>

#include "mimcount/errors.hpp"
#include "mimcount/graph6.hpp"
#include "mimcount/matching.hpp"
#include "mimcount/report.hpp"

namespace mimcount {

namespace {

constexpr int kCheckpointVersion = 1;

struct Record {
  std::uint64_t line;
  std::string text;
};

/// Per-worker aggregate; merged in batch order.
struct Partial {
  std::uint64_t seen = 0;
  std::uint64_t counted = 0;
  BigInt max_count = 0;
  std::vector<std::string> maximizers;
  VerdictTally tally;
  std::vector<RecordIssue> violations;
  std::vector<RecordIssue> errors;
};

void absorb_max(BigInt& max, std::vector<std::string>& maximizers, const BigInt& count,
                std::vector<std::string> graphs) {
  if (graphs.empty()) return;
  if (count > max) {
    max = count;
    maximizers = std::move(graphs);
  } else if (count == max) {
    maximizers.insert(maximizers.end(), std::make_move_iterator(graphs.begin()),
                      std::make_move_iterator(graphs.end()));
  }
}

struct Evaluator {
  SweepFilter filter;
  BoundKind bound;
  std::size_t order;
  std::optional<BoundValue> bracket;
  std::optional<RadicalExpr> expr;

  void run(const Record& rec, Partial& out) const {
    Graph g;
    try {
      g = from_graph6(rec.text);
    } catch (const std::exception& e) {
      out.errors.push_back({rec.line, "", e.what()});
      return;
    }
    if (g.order() != order) {
      out.errors.push_back({rec.line, rec.text,
                            "order " + std::to_string(g.order()) + " differs from " + std::to_string(order)});
      return;
    }
    ++out.seen;
    if (!filter.accepts(g)) return;
    ++out.counted;
    const BigInt count = count_maximal(g);
    if (bracket) {
      Verdict v = compare_count(count, *bracket);
      if (v == Verdict::Unresolved) v = compare_count(count, *expr);
      switch (v) {
        case Verdict::StrictlyBelow: ++out.tally.strictly_below; break;
        case Verdict::AtExactBound: ++out.tally.at_exact_bound; break;
        case Verdict::Above:
          ++out.tally.above;
          out.violations.push_back({rec.line, to_graph6(g), count.str()});
          break;
        case Verdict::Unresolved: ++out.tally.unresolved; break;
      }
    }
    if (count >= out.max_count) absorb_max(out.max_count, out.maximizers, count, {to_graph6(g)});
  }
};

void merge(SweepReport& r, Partial&& p) {
  r.graphs_seen += p.seen;
  r.graphs_counted += p.counted;
  absorb_max(r.max_count, r.maximizers, p.max_count, std::move(p.maximizers));
  r.tally.strictly_below += p.tally.strictly_below;
  r.tally.at_exact_bound += p.tally.at_exact_bound;
  r.tally.above += p.tally.above;
  r.tally.unresolved += p.tally.unresolved;
  r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
  r.errors.insert(r.errors.end(), p.errors.begin(), p.errors.end());
}

void process_batch(const Evaluator& ev, const std::vector<Record>& batch, unsigned jobs, SweepReport& report) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, batch.size()));
  std::vector<Partial> parts(workers);
  auto work = [&](std::size_t w) {
    const std::size_t lo = batch.size() * w / workers;
    const std::size_t hi = batch.size() * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) ev.run(batch[i], parts[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(work, w);
    work(0);
  }
  for (Partial& p : parts) merge(report, std::move(p));
}

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

nlohmann::json options_signature(const SweepOptions& o, std::size_t order) {
  nlohmann::json j;
  j["bound"] = to_string(o.bound);
  j["require_connected"] = o.filter.require_connected;
  j["exclude_regular"] = o.filter.exclude_regular;
  j["max_degree"] = o.filter.max_degree ? nlohmann::json(*o.filter.max_degree) : nlohmann::json(nullptr);
  j["order"] = order;
  return j;
}

void write_checkpoint(const std::string& path, const nlohmann::json& signature, std::uint64_t lines,
                      const SweepReport& report, bool complete) {
  nlohmann::json j;
  j["version"] = kCheckpointVersion;
  j["options"] = signature;
  j["lines_consumed"] = lines;
  j["complete"] = complete;
  j["report"] = to_json(report);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

void finalize(SweepReport& r) {
  std::sort(r.maximizers.begin(), r.maximizers.end());
  r.maximizers.erase(std::unique(r.maximizers.begin(), r.maximizers.end()), r.maximizers.end());
  auto by_line = [](const RecordIssue& a, const RecordIssue& b) { return a.line < b.line; };
  std::sort(r.violations.begin(), r.violations.end(), by_line);
  std::sort(r.errors.begin(), r.errors.end(), by_line);
}

}  // namespace

bool SweepFilter::accepts(const Graph& g) const {
  if (max_degree && mimcount::max_degree(g) > *max_degree) return false;
  if (exclude_regular && is_regular(g)) return false;
  if (require_connected && !is_connected(g)) return false;
  return true;
}

std::string to_string(BoundKind b) {
  switch (b) {
    case BoundKind::None: return "none";
    case BoundKind::F: return "f";
    case BoundKind::G: return "g";
    case BoundKind::Q: return "q";
    case BoundKind::I: return "I";
  }
  return "?";
}

BoundKind parse_bound(std::string_view text) {
  if (text == "none") return BoundKind::None;
  if (text == "f" || text == "F") return BoundKind::F;
  if (text == "g" || text == "G") return BoundKind::G;
  if (text == "q" || text == "Q") return BoundKind::Q;
  if (text == "i" || text == "I") return BoundKind::I;
  throw DomainError("unknown bound '" + std::string(text) + "'");
}

RadicalExpr bound_expr(BoundKind kind, std::size_t n) {
  const long order = static_cast<long>(n);
  switch (kind) {
    case BoundKind::F: return f_expr(order);
    case BoundKind::G: return g_expr(order);
    case BoundKind::Q: return RadicalExpr::constant(Rational(eval_q(order)));
    case BoundKind::I: return conjecture_expr(order);
    case BoundKind::None: break;
  }
  throw DomainError("no bound selected");
}

SweepReport sweep(std::istream& in, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());

  SweepReport report;
  report.bound = options.bound;
  std::uint64_t line_no = 0;
  std::string line;

  // The first decodable record fixes the order when the filter leaves it open.
  std::vector<Record> pending;
  std::optional<std::size_t> order = options.filter.order;
  while (!order && std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty()) continue;
    try {
      order = from_graph6(t).order();
    } catch (const std::exception&) {
    }
    pending.push_back({line_no, std::move(t)});
  }
  report.order = order;
  if (!order) {
    // Nothing decodable: every record is an error.
    Evaluator ev{options.filter, options.bound, 0, std::nullopt, std::nullopt};
    Partial p;
    for (const Record& r : pending) ev.run(r, p);
    report.records_read = pending.size();
    report.errors = std::move(p.errors);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }

  Evaluator ev{options.filter, options.bound, *order, std::nullopt, std::nullopt};
  if (options.bound != BoundKind::None) {
    ev.expr = bound_expr(options.bound, *order);
    ev.bracket = ev.expr->bracket();
  }

  const nlohmann::json signature = options_signature(options, *order);
  std::uint64_t resume_lines = 0;
  if (!options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path)) {
    std::ifstream cp(options.checkpoint_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(cp);
    } catch (const std::exception& e) {
      throw ParseError("unreadable checkpoint: " + std::string(e.what()));
    }
    if (j.value("version", 0) != kCheckpointVersion) throw ParseError("checkpoint version mismatch");
    if (j.at("options") != signature) throw ParseError("checkpoint was written for different sweep options");
    resume_lines = j.at("lines_consumed").get<std::uint64_t>();
    report = sweep_report_from_json(j.at("report"));
  }

  std::vector<Record> batch;
  std::uint64_t last_checkpoint = report.records_read;
  std::uint64_t last_progress = report.records_read;
  auto flush = [&]() {
    if (batch.empty()) return;
    process_batch(ev, batch, jobs, report);
    report.records_read += batch.size();
    batch.clear();
    if (options.progress && options.progress_every &&
        report.records_read / options.progress_every != last_progress / options.progress_every)
      options.progress(report.records_read);
    last_progress = report.records_read;
    if (!options.checkpoint_path.empty() && report.records_read - last_checkpoint >= options.checkpoint_every) {
      finalize(report);
      write_checkpoint(options.checkpoint_path, signature, line_no, report, false);
      last_checkpoint = report.records_read;
    }
  };

  for (Record& r : pending) {
    if (r.line <= resume_lines) continue;
    batch.push_back(std::move(r));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no <= resume_lines) continue;
    std::string t = trim(line);
    if (t.empty()) continue;
    batch.push_back({line_no, std::move(t)});
    if (batch.size() >= options.batch_size) flush();
  }
  flush();
  finalize(report);
  if (!options.checkpoint_path.empty())
    write_checkpoint(options.checkpoint_path, signature, std::max(line_no, resume_lines), report, true);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

BigInt sweep_qnx(std::istream& in, std::size_t n, std::size_t x, unsigned jobs) {
  SweepOptions o;
  o.filter.order = n;
  o.filter.max_degree = x;
  o.filter.exclude_regular = true;
  o.jobs = jobs;
  return sweep(in, o).max_count;
}

}  // namespace mimcount
