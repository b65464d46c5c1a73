#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mimcount/formulas.hpp"
#include "mimcount/harness.hpp"
#include "mimcount/lemmas.hpp"

namespace mimcount {

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json big_to_json(const BigInt& v);
BigInt big_from_json(const nlohmann::json& j);

/// Keys are sorted, so the dump is byte-stable. Elapsed time is only
/// included on request because it varies between runs.
nlohmann::json to_json(const SweepReport& r, bool include_timing = false);
SweepReport sweep_report_from_json(const nlohmann::json& j);
std::string to_text(const SweepReport& r, bool include_timing = false);

nlohmann::json to_json(const LemmaCheckResult& r);
std::string to_text(const LemmaCheckResult& r);

/// Summary plus the failing checks only.
nlohmann::json to_json(const std::vector<InequalityCheck>& ledger);
std::string to_text(const std::vector<InequalityCheck>& ledger);

}  // namespace mimcount
