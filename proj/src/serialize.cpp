#include "achlioptas/serialize.hpp"

#include <chrono>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace achlioptas {

using nlohmann::json;

namespace {

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::vector<Edge> edges_from(const json& a) {
  std::vector<Edge> out;
  for (const auto& p : a) out.push_back({p.at(0).get<Vertex>(), p.at(1).get<Vertex>()});
  return out;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

OutcomeKind parse_outcome(const std::string& s) {
  for (OutcomeKind k : {OutcomeKind::Hamiltonian, OutcomeKind::Completed,
                        OutcomeKind::StopConditionMet, OutcomeKind::BudgetExhausted,
                        OutcomeKind::PhaseFailed, OutcomeKind::NotCertified}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

}  // namespace

json to_json(const LedgerEntry& entry) {
  json j;
  j["round"] = entry.round;
  j["candidates"] = edges_json(entry.candidates);
  j["choice"] = entry.choice ? json(*entry.choice) : json(nullptr);
  j["applied"] = entry.applied;
  j["phase"] = entry.phase;
  return j;
}

LedgerEntry ledger_entry_from_json(const json& j) {
  return guarded("ledger entry", [&] {
    LedgerEntry e;
    e.round = j.at("round").get<std::uint64_t>();
    e.candidates = edges_from(j.at("candidates"));
    if (!j.at("choice").is_null()) e.choice = j.at("choice").get<std::size_t>();
    e.applied = j.value("applied", false);
    e.phase = j.value("phase", std::size_t{0});
    return e;
  });
}

json to_json(const RunRecord& r, bool with_ledger, const std::optional<std::string>& timestamp) {
  json j;
  j["seed"] = r.seed;
  j["rng_algorithm"] = r.rng_algorithm;
  j["strategy"] = r.strategy;
  j["n"] = r.n;
  j["K"] = r.k;
  j["model"] = std::string(to_string(r.model));
  json phases = json::array();
  for (const auto& p : r.phases) phases.push_back({{"name", p.name}, {"rounds", p.rounds}});
  j["phases"] = phases;
  j["total_rounds"] = r.total_rounds;
  j["discarded_rounds"] = r.discarded_rounds;
  j["final_edges"] = r.final_edges;
  j["graph_fingerprint"] = r.graph_fingerprint;
  json outcome;
  outcome["kind"] = std::string(to_string(r.outcome.kind));
  if (r.outcome.kind == OutcomeKind::PhaseFailed) outcome["phase"] = r.outcome.phase;
  if (r.outcome.kind == OutcomeKind::Hamiltonian) outcome["cycle"] = r.outcome.cycle;
  j["outcome"] = outcome;
  if (with_ledger) {
    json ledger = json::array();
    for (const auto& e : r.ledger) ledger.push_back(to_json(e));
    j["ledger"] = ledger;
  }
  json meta = json::object();
  if (timestamp) meta["timestamp"] = *timestamp;
  j["metadata"] = meta;
  return j;
}

RunRecord run_record_from_json(const json& j) {
  return guarded("run record", [&] {
    RunRecord r;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.rng_algorithm = j.at("rng_algorithm").get<std::string>();
    r.strategy = j.at("strategy").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("K").get<std::size_t>();
    r.model = parse_sampling_model(j.at("model").get<std::string>());
    for (const auto& p : j.at("phases")) {
      r.phases.push_back({p.at("name").get<std::string>(), p.at("rounds").get<std::uint64_t>()});
    }
    r.total_rounds = j.at("total_rounds").get<std::uint64_t>();
    r.discarded_rounds = j.value("discarded_rounds", std::uint64_t{0});
    r.final_edges = j.value("final_edges", std::size_t{0});
    r.graph_fingerprint = j.value("graph_fingerprint", std::uint64_t{0});
    const json& o = j.at("outcome");
    r.outcome.kind = parse_outcome(o.at("kind").get<std::string>());
    r.outcome.phase = o.value("phase", std::string{});
    if (o.contains("cycle")) r.outcome.cycle = o.at("cycle").get<std::vector<Vertex>>();
    if (j.contains("ledger")) {
      for (const auto& e : j.at("ledger")) r.ledger.push_back(ledger_entry_from_json(e));
    }
    return r;
  });
}

json to_json(const LemmaReport& report) {
  json j;
  j["lemma"] = report.lemma;
  json params = json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = params;
  j["passed"] = report.passed;
  j["verdict"] = report.verdict();
  j["mode"] = report.mode;
  j["sets_checked"] = report.sets_checked;
  json w = json::array();
  for (const auto& x : report.witnesses) {
    w.push_back({{"kind", x.kind}, {"vertices", x.vertices}, {"value", x.value}});
  }
  j["witnesses"] = w;
  return j;
}

json to_json(const CollectAllReport& r) {
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); };
  return json{{"rounds", r.rounds},
              {"union_edges", r.union_edges},
              {"min_degree_2_round", opt(r.min_degree_2_round)},
              {"hamiltonian_round", opt(r.hamiltonian_round)},
              {"cycle", r.cycle}};
}

void write_ledger_jsonl(std::ostream& out, const std::vector<LedgerEntry>& ledger) {
  for (const auto& e : ledger) out << to_json(e).dump() << '\n';
}

std::vector<LedgerEntry> read_ledger_jsonl(std::istream& in) {
  std::vector<LedgerEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(ledger_entry_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("ledger line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_cycle(std::ostream& out, const std::vector<Vertex>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
  out << '\n';
}

std::vector<Vertex> read_cycle(std::istream& in) {
  std::vector<Vertex> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-') {
      throw std::runtime_error("cycle file: '" + token + "' is not a vertex id");
    }
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace achlioptas
