#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "mimcount/errors.hpp"
#include "mimcount/families.hpp"
#include "mimcount/formulas.hpp"
#include "mimcount/graph6.hpp"
#include "mimcount/harness.hpp"
#include "mimcount/lemmas.hpp"
#include "mimcount/matching.hpp"
#include "mimcount/report.hpp"

namespace mimcount::cli {

namespace {

using nlohmann::json;

/// Raised for bad input data (as opposed to bad flags).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string g6;
  std::string file;
  std::string format = "g6";

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--g6", g6, "Single graph6 record");
    auto* f = cmd->add_option("--file", file, "Read graphs from a file instead of standard input");
    g->excludes(f);
    cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"g6", "edges"}));
  }
};

/// Calls `visit` for every input graph: each graph6 line, or the whole
/// stream as one edge list.
void for_each_input(const InputOptions& opt, std::istream& in, const std::function<void(const Graph&)>& visit) {
  std::ifstream file;
  std::istream* src = &in;
  if (!opt.g6.empty()) {
    if (opt.format != "g6") throw CLI::ValidationError("--g6 cannot be combined with --format edges");
    try {
      visit(from_graph6(opt.g6));
    } catch (const ParseError& e) {
      throw InputError(e.what());
    } catch (const GraphError& e) {
      throw InputError(e.what());
    }
    return;
  }
  if (!opt.file.empty()) {
    file.open(opt.file);
    if (!file) throw InputError("cannot read " + opt.file);
    src = &file;
  }
  if (opt.format == "edges") {
    std::ostringstream buf;
    buf << src->rdbuf();
    Graph g;
    try {
      g = from_edge_list_text(buf.str());
    } catch (const ParseError& e) {
      throw InputError(e.what());
    } catch (const GraphError& e) {
      throw InputError(e.what());
    }
    visit(g);
    return;
  }
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(*src, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    Graph g;
    try {
      g = from_graph6(line);
    } catch (const std::exception& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    visit(g);
  }
}

Memo parse_memo(const std::string& s) {
  if (s == "on") return Memo::On;
  if (s == "off") return Memo::Off;
  return Memo::Auto;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("MIMCOUNT_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string cell(const BoundValue& b, int digits) {
  if (b.exact) return b.exact->str();
  return decimal_floor(b.lo, digits) + ".." + decimal_ceil(b.hi, digits);
}

void bound_json(json& row, const std::string& key, const BoundValue& b, int digits) {
  row[key + "_lo"] = decimal_floor(b.lo, digits);
  row[key + "_hi"] = decimal_ceil(b.hi, digits);
  if (b.exact) row[key + "_exact"] = big_to_json(*b.exact);
}

std::optional<BoundValue> table_value(const std::string& name, long n, const Rational& res) {
  if (name == "f") return n >= 1 ? std::optional(eval_f(n, res)) : std::nullopt;
  if (name == "g") return n >= 0 ? std::optional(eval_g(n, res)) : std::nullopt;
  if (name == "f1") return n >= 14 ? std::optional(eval_f1(n, res)) : std::nullopt;
  if (name == "I") return n >= 1 ? std::optional(eval_conjecture_I(n, res)) : std::nullopt;
  if (name == "q") {
    if (n < 8) return std::nullopt;
    const BigInt q = eval_q(n);
    return BoundValue{Rational(q), Rational(q), q};
  }
  return std::nullopt;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Count and verify maximal induced matchings", "mimcount"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  // count / maxcount / enumerate / classify
  InputOptions count_in;
  std::string memo = "auto";
  bool use_oracle = false;
  bool count_json = false;
  auto* count = app.add_subcommand("count", "Number of maximal induced matchings, one line per graph");
  count_in.attach(count);
  count->add_option("--memo", memo, "Sub-problem cache")->check(CLI::IsMember({"auto", "on", "off"}));
  count->add_flag("--oracle", use_oracle, "Use the independent conflict-graph enumerator");
  count->add_flag("--json", count_json, "One JSON object per graph");

  InputOptions max_in;
  bool max_json = false;
  auto* maxcount = app.add_subcommand("maxcount", "Maximum induced matching size and the number attaining it");
  max_in.attach(maxcount);
  maxcount->add_flag("--json", max_json, "One JSON object per graph");

  InputOptions enum_in;
  bool enum_json = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every maximal induced matching, sorted");
  enum_in.attach(enumerate);
  enumerate->add_flag("--json", enum_json, "One JSON array of edge lists per graph");

  InputOptions cls_in;
  std::size_t vertex = 0;
  bool cls_json = false;
  auto* classify = app.add_subcommand("classify", "alpha/beta/theta/phi split at a vertex");
  cls_in.attach(classify);
  classify->add_option("--vertex", vertex, "Vertex id")->required();
  classify->add_flag("--json", cls_json, "JSON output");

  // build
  std::string family;
  std::string build_format = "g6";
  auto* buildcmd = app.add_subcommand("build", "Emit a named graph (K:n C:n P:n F:n Fp:n Q:n conjF:n star:r/s1,s2)");
  buildcmd->add_option("spec", family, "Family spec")->required();
  buildcmd->add_option("--format", build_format, "Output format")->check(CLI::IsMember({"g6", "edges"}));

  // table
  long from = 1;
  long to = 31;
  std::string bounds = "f,g,q,I";
  int digits = 4;
  bool table_json = false;
  auto* table = app.add_subcommand("table", "Closed-form bounds, exact or as certified brackets");
  table->add_option("--from", from, "First order")->check(CLI::NonNegativeNumber);
  table->add_option("--to", to, "Last order")->check(CLI::NonNegativeNumber);
  table->add_option("--bounds", bounds, "Comma list of f, g, q, I, f1");
  table->add_option("--digits", digits, "Decimal places for brackets")->check(CLI::Range(0, 60));
  table->add_flag("--json", table_json, "JSON rows");

  // sweep
  std::optional<std::size_t> order;
  std::string bound = "none";
  bool connected = false;
  std::optional<std::size_t> max_deg;
  bool non_regular = false;
  std::string sweep_file;
  std::string checkpoint;
  unsigned jobs = 0;
  bool sweep_json = false;
  bool timing = false;
  bool quiet = false;
  auto* sweepcmd = app.add_subcommand("sweep", "Count every graph6 record and certify it against a bound");
  sweepcmd->add_option("--order", order, "Expected order (default: first record)");
  sweepcmd->add_option("--bound", bound, "f, g, q, I or none")->check(CLI::IsMember({"f", "g", "q", "I", "none"}));
  sweepcmd->add_flag("--connected", connected, "Skip disconnected graphs");
  sweepcmd->add_option("--max-degree", max_deg, "Skip graphs with a larger maximum degree");
  sweepcmd->add_flag("--non-regular", non_regular, "Skip regular graphs");
  sweepcmd->add_option("--file", sweep_file, "Read records from a file instead of standard input");
  sweepcmd->add_option("--checkpoint", checkpoint, "Checkpoint file to write and resume from");
  sweepcmd->add_option("--jobs", jobs, "Worker threads (default $MIMCOUNT_JOBS or all cores)");
  sweepcmd->add_flag("--json", sweep_json, "JSON report");
  sweepcmd->add_flag("--timing", timing, "Include elapsed time in the report");
  sweepcmd->add_flag("--quiet", quiet, "No progress messages");

  // lemmas
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t instances = 0;
  bool lemma_json = false;
  auto* lemmas = app.add_subcommand("lemmas", "Seeded lemma suites and the formula ledger");
  lemmas->add_option("--suite", suite, "sandwich, pendant, retwin, falsetwin or formulas")
      ->required()
      ->check(CLI::IsMember({"sandwich", "pendant", "retwin", "falsetwin", "formulas"}));
  lemmas->add_option("--seed", seed, "Random seed");
  lemmas->add_option("--instances", instances, "Suite size (default per suite)");
  lemmas->add_flag("--json", lemma_json, "JSON output");

  std::vector<std::string> argv_store{"mimcount"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) {
      CountOptions opts;
      opts.memo = parse_memo(memo);
      for_each_input(count_in, in, [&](const Graph& g) {
        const BigInt c = use_oracle ? count_maximal_oracle(g) : count_maximal(g, opts);
        if (count_json) out << json{{"graph6", to_graph6(g)}, {"count", big_to_json(c)}}.dump() << '\n';
        else out << c << '\n';
      });
      return kOk;
    }
    if (maxcount->parsed()) {
      for_each_input(max_in, in, [&](const Graph& g) {
        const MaximumCount m = count_maximum(g);
        if (max_json)
          out << json{{"graph6", to_graph6(g)}, {"size", m.size}, {"count", big_to_json(m.count)}}.dump() << '\n';
        else out << m.size << ' ' << m.count << '\n';
      });
      return kOk;
    }
    if (enumerate->parsed()) {
      bool first = true;
      for_each_input(enum_in, in, [&](const Graph& g) {
        const auto all = enumerate_maximal(g);
        if (enum_json) {
          json arr = json::array();
          for (const auto& m : all) {
            json edges = json::array();
            for (Edge e : m.edges) edges.push_back({e.u, e.v});
            arr.push_back(edges);
          }
          out << arr.dump() << '\n';
          return;
        }
        if (!first) out << '\n';
        first = false;
        for (const auto& m : all) out << (m.edges.empty() ? "{}" : format_matching(m)) << '\n';
      });
      return kOk;
    }
    if (classify->parsed()) {
      for_each_input(cls_in, in, [&](const Graph& g) {
        if (vertex >= g.order())
          throw CLI::ValidationError("--vertex " + std::to_string(vertex) + " is not a vertex of an order-" +
                                     std::to_string(g.order()) + " graph");
        const VertexClassification c = classify_vertex(g, static_cast<Vertex>(vertex));
        if (cls_json)
          out << json{{"vertex", vertex},
                      {"alpha", big_to_json(c.alpha)},
                      {"beta", big_to_json(c.beta)},
                      {"theta", big_to_json(c.theta)},
                      {"phi", big_to_json(c.phi)}}
                     .dump()
              << '\n';
        else
          out << "alpha " << c.alpha << " beta " << c.beta << " theta " << c.theta << " phi " << c.phi << '\n';
      });
      return kOk;
    }
    if (buildcmd->parsed()) {
      const Graph g = build(parse_family(family));
      if (build_format == "edges") out << to_edge_list_text(g);
      else out << to_graph6(g) << '\n';
      return kOk;
    }
    if (table->parsed()) {
      if (from > to) throw CLI::ValidationError("--from must not exceed --to");
      const std::vector<std::string> names = split_list(bounds);
      for (const std::string& b : names)
        if (b != "f" && b != "g" && b != "q" && b != "I" && b != "f1")
          throw CLI::ValidationError("unknown bound '" + b + "' in --bounds");
      // Brackets must be narrow enough to print `digits` places meaningfully.
      Rational res = kDefaultResolution;
      for (int i = 0; i < digits; ++i) res /= 10;
      if (table_json) {
        json rows = json::array();
        for (long n = from; n <= to; ++n) {
          json row;
          row["n"] = n;
          for (const std::string& b : names) {
            const auto v = table_value(b, n, res);
            if (!v) continue;
            if (b == "q") row["q"] = big_to_json(*v->exact);
            else bound_json(row, b, *v, digits);
          }
          rows.push_back(row);
        }
        out << rows.dump(2) << '\n';
        return kOk;
      }
      std::vector<std::vector<std::string>> grid;
      grid.push_back({"n"});
      for (const std::string& b : names) grid[0].push_back(b);
      for (long n = from; n <= to; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        for (const std::string& b : names) {
          const auto v = table_value(b, n, res);
          row.push_back(v ? cell(*v, digits) : "-");
        }
        grid.push_back(row);
      }
      std::vector<std::size_t> width(grid[0].size(), 0);
      for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c) out << "  ";
          out << std::setw(static_cast<int>(width[c])) << row[c];
        }
        out << '\n';
      }
      return kOk;
    }
    if (sweepcmd->parsed()) {
      SweepOptions opts;
      opts.filter.order = order;
      opts.filter.require_connected = connected;
      opts.filter.max_degree = max_deg;
      opts.filter.exclude_regular = non_regular;
      opts.bound = parse_bound(bound);
      opts.jobs = jobs ? jobs : default_jobs();
      opts.checkpoint_path = checkpoint;
      if (!quiet) opts.progress = [&](std::uint64_t n) { err << "mimcount: " << n << " records\n" << std::flush; };
      std::ifstream file;
      std::istream* src = &in;
      if (!sweep_file.empty()) {
        file.open(sweep_file);
        if (!file) throw InputError("cannot read " + sweep_file);
        src = &file;
      }
      const SweepReport report = sweep(*src, opts);
      if (sweep_json) out << to_json(report, timing).dump(2) << '\n';
      else out << to_text(report, timing);
      if (!report.sound()) {
        for (const RecordIssue& v : report.violations)
          err << "mimcount: bound violated at line " << v.line << ": " << v.graph6 << " has " << v.message << '\n';
        return kBoundViolation;
      }
      if (!report.errors.empty()) {
        err << "mimcount: " << report.errors.size() << " malformed record(s)\n";
        return kMalformedInput;
      }
      return kOk;
    }
    if (lemmas->parsed()) {
      if (suite == "formulas") {
        const auto ledger = formula_ledger();
        if (lemma_json) out << to_json(ledger).dump(2) << '\n';
        else out << to_text(ledger);
        return std::all_of(ledger.begin(), ledger.end(), [](const InequalityCheck& c) { return c.holds; })
                   ? kOk
                   : kBoundViolation;
      }
      const LemmaCheckResult r = run_suite(suite, {seed, instances});
      if (lemma_json) out << to_json(r).dump(2) << '\n';
      else out << to_text(r);
      return r.passed() ? kOk : kBoundViolation;
    }
  } catch (const CLI::ValidationError& e) {
    err << "mimcount: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "mimcount: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const ParseError& e) {
    err << "mimcount: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "mimcount: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    err << "mimcount: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "mimcount: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kUsage;
}

}  // namespace mimcount::cli
