#include "mimcount/report.hpp"

#include <limits>
#include <sstream>

namespace mimcount {

using nlohmann::json;

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return json(static_cast<std::uint64_t>(v));
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

BigInt big_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  return BigInt(j.get<std::string>());
}

namespace {

json issues_to_json(const std::vector<RecordIssue>& issues) {
  json arr = json::array();
  for (const RecordIssue& i : issues) arr.push_back({{"line", i.line}, {"graph6", i.graph6}, {"message", i.message}});
  return arr;
}

std::vector<RecordIssue> issues_from_json(const json& arr) {
  std::vector<RecordIssue> out;
  for (const json& i : arr)
    out.push_back({i.at("line").get<std::uint64_t>(), i.at("graph6").get<std::string>(),
                   i.at("message").get<std::string>()});
  return out;
}

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
  }
  return "?";
}

}  // namespace

json to_json(const SweepReport& r, bool include_timing) {
  json j;
  j["order"] = r.order ? json(*r.order) : json(nullptr);
  j["bound"] = to_string(r.bound);
  j["records_read"] = r.records_read;
  j["graphs_seen"] = r.graphs_seen;
  j["graphs_counted"] = r.graphs_counted;
  j["max_count"] = big_to_json(r.max_count);
  j["maximizers"] = r.maximizers;
  j["bound_verdict"] = {{"StrictlyBelow", r.tally.strictly_below},
                        {"AtExactBound", r.tally.at_exact_bound},
                        {"Above", r.tally.above},
                        {"Unresolved", r.tally.unresolved}};
  j["violations"] = issues_to_json(r.violations);
  j["errors"] = issues_to_json(r.errors);
  if (include_timing) j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport r;
  if (!j.at("order").is_null()) r.order = j.at("order").get<std::size_t>();
  r.bound = parse_bound(j.at("bound").get<std::string>());
  r.records_read = j.at("records_read").get<std::uint64_t>();
  r.graphs_seen = j.at("graphs_seen").get<std::uint64_t>();
  r.graphs_counted = j.at("graphs_counted").get<std::uint64_t>();
  r.max_count = big_from_json(j.at("max_count"));
  r.maximizers = j.at("maximizers").get<std::vector<std::string>>();
  const json& t = j.at("bound_verdict");
  r.tally.strictly_below = t.at("StrictlyBelow").get<std::uint64_t>();
  r.tally.at_exact_bound = t.at("AtExactBound").get<std::uint64_t>();
  r.tally.above = t.at("Above").get<std::uint64_t>();
  r.tally.unresolved = t.at("Unresolved").get<std::uint64_t>();
  r.violations = issues_from_json(j.at("violations"));
  r.errors = issues_from_json(j.at("errors"));
  return r;
}

std::string to_text(const SweepReport& r, bool include_timing) {
  std::ostringstream out;
  out << "order           " << (r.order ? std::to_string(*r.order) : "-") << '\n';
  out << "bound           " << to_string(r.bound) << '\n';
  out << "records read    " << r.records_read << '\n';
  out << "graphs seen     " << r.graphs_seen << '\n';
  out << "graphs counted  " << r.graphs_counted << '\n';
  out << "max count       " << r.max_count << '\n';
  out << "maximizers      " << r.maximizers.size() << '\n';
  for (const std::string& m : r.maximizers) out << "  " << m << '\n';
  if (r.bound != BoundKind::None) {
    out << "below / at / above / unresolved  " << r.tally.strictly_below << " / " << r.tally.at_exact_bound
        << " / " << r.tally.above << " / " << r.tally.unresolved << '\n';
  }
  for (const RecordIssue& v : r.violations)
    out << "VIOLATION line " << v.line << ": " << v.graph6 << " count " << v.message << '\n';
  for (const RecordIssue& e : r.errors) out << "error line " << e.line << ": " << e.message << '\n';
  if (include_timing) out << "elapsed         " << r.elapsed.count() << " s\n";
  return out.str();
}

json to_json(const LemmaCheckResult& r) {
  json j;
  j["lemma"] = r.lemma;
  j["instances_tested"] = r.instances_tested;
  j["hypothesis_held"] = r.hypothesis_held;
  j["conclusion_held"] = r.conclusion_held;
  j["unguarded_failures"] = r.unguarded_failures;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["passed"] = r.passed();
  json arr = json::array();
  for (const Counterexample& c : r.counterexamples) arr.push_back({{"graph6", c.graph6}, {"details", c.details}});
  j["counterexamples"] = arr;
  return j;
}

std::string to_text(const LemmaCheckResult& r) {
  std::ostringstream out;
  out << r.lemma << ": " << (r.passed() ? "ok" : "FAILED") << '\n';
  if (r.seed) out << "  seed                " << *r.seed << '\n';
  out << "  instances           " << r.instances_tested << '\n';
  out << "  hypothesis held     " << r.hypothesis_held << '\n';
  out << "  conclusion held     " << r.conclusion_held << '\n';
  out << "  unguarded failures  " << r.unguarded_failures << '\n';
  for (const Counterexample& c : r.counterexamples) out << "  counterexample " << c.graph6 << ": " << c.details << '\n';
  return out.str();
}

json to_json(const std::vector<InequalityCheck>& ledger) {
  json j;
  std::size_t failed = 0;
  std::size_t unresolved = 0;
  json failures = json::array();
  for (const InequalityCheck& c : ledger) {
    if (c.sign == Sign::Unresolved) ++unresolved;
    if (c.holds) continue;
    ++failed;
    failures.push_back({{"family", c.family},
                        {"n", c.n},
                        {"param", c.param},
                        {"param2", c.param2},
                        {"relation", relation_symbol(c.relation)},
                        {"sign", to_string(c.sign)}});
  }
  j["checks"] = ledger.size();
  j["failed"] = failed;
  j["unresolved"] = unresolved;
  j["failures"] = failures;
  return j;
}

std::string to_text(const std::vector<InequalityCheck>& ledger) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const InequalityCheck& c : ledger) {
    if (c.holds) continue;
    ++failed;
    out << "FAILED " << c.family << " n=" << c.n << " param=" << c.param << " param2=" << c.param2
        << " sign(lhs-rhs)=" << to_string(c.sign) << '\n';
  }
  out << ledger.size() << " checks, " << failed << " failed\n";
  return out.str();
}

}  // namespace mimcount
