#pragma once

#include <optional>
#include <string>

#include "betti/betti_table.hpp"
#include "betti/laws.hpp"
#include "betti/scan.hpp"

#include "json.hpp"

namespace betti {

inline constexpr int kSchemaVersion = 1;

nlohmann::json table_json(const BettiTable& t);

// One JSONL record per check. elapsed_us is emitted only when asked for:
// scan output must be reproducible byte for byte, so it never includes it.
nlohmann::json report_json(const CheckReport& r, const std::optional<std::string>& graph6,
                           bool include_elapsed);

nlohmann::json summary_json(const ScanSummary& s);

}  // namespace betti
