#pragma once

// JSON forms of run records, ledgers and lemma reports, plus the plain-text
// cycle certificate format.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "achlioptas/engine.hpp"
#include "achlioptas/strategies.hpp"
#include "achlioptas/verify.hpp"

namespace achlioptas {

/// One ledger line: {round, candidates, choice, applied, phase}; choice is null for Skip.
nlohmann::json to_json(const LedgerEntry& entry);
LedgerEntry ledger_entry_from_json(const nlohmann::json& j);

/// The ledger is embedded only when `with_ledger` is set. `timestamp`, when
/// given, is stored under metadata and is the only non-deterministic field.
nlohmann::json to_json(const RunRecord& record, bool with_ledger = false,
                       const std::optional<std::string>& timestamp = std::nullopt);
/// Throws std::invalid_argument on missing or ill-typed fields.
RunRecord run_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LemmaReport& report);

/// Hitting times are null when never reached.
nlohmann::json to_json(const CollectAllReport& report);

void write_ledger_jsonl(std::ostream& out, const std::vector<LedgerEntry>& ledger);
/// Throws std::runtime_error on malformed lines.
std::vector<LedgerEntry> read_ledger_jsonl(std::istream& in);

/// Single line of vertex ids separated by spaces.
void write_cycle(std::ostream& out, const std::vector<Vertex>& cycle);
/// Reads whitespace-separated vertex ids; throws std::runtime_error on junk.
std::vector<Vertex> read_cycle(std::istream& in);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace achlioptas
