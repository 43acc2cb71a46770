#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "achlioptas/graph.hpp"
#include "achlioptas/posa.hpp"
#include "achlioptas/rng.hpp"

namespace achlioptas {

/// How the K candidates of a round are drawn.
///  ExactMissing: K distinct edges, uniform among those absent from the graph.
///  RelaxedPairs: K independent uniform ordered pairs over [n]^2; loops and
///  already present edges may appear and are discarded if picked.
enum class SamplingModel { ExactMissing, RelaxedPairs };

std::string_view to_string(SamplingModel model);
/// Accepts "exact" / "relaxed". Throws std::invalid_argument otherwise.
SamplingModel parse_sampling_model(std::string_view text);

struct RoundOffer {
  std::uint64_t round_index = 0;
  std::vector<Edge> candidates;
};

/// Pick(index) adds candidates[index]; Skip adds nothing. Both consume the round.
class Choice {
 public:
  static Choice pick(std::size_t index) { return Choice(index); }
  static Choice skip() { return Choice(); }

  bool is_skip() const { return !index_.has_value(); }
  std::size_t index() const { return *index_; }
  const std::optional<std::size_t>& raw() const { return index_; }

  friend bool operator==(const Choice&, const Choice&) = default;

 private:
  Choice() = default;
  explicit Choice(std::size_t i) : index_(i) {}
  std::optional<std::size_t> index_;
};

enum class StrategyState {
  Running,
  /// Hamilton cycle produced; certificate attached.
  Succeeded,
  /// Construction goal met where no cycle is expected (e.g. a d-out graph).
  Completed,
  /// A phase budget ran out before its structural goal.
  Failed,
  /// Construction finished but the Hamiltonicity search found no cycle.
  NotCertified,
};

struct StrategyStatus {
  StrategyState state = StrategyState::Running;
  std::string failed_phase;
  Cycle cycle;

  bool terminal() const { return state != StrategyState::Running; }
};

/// Online edge-selection rule. A strategy sees the current offer, the current
/// graph and its own state, never future offers. All randomness it uses must
/// come from the Rng handed in by the engine (the run's strategy sub-stream).
class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;
  virtual std::vector<std::string> phase_names() const = 0;
  /// Index into phase_names() of the phase the next round belongs to.
  virtual std::size_t phase() const = 0;

  /// Called before every round (and once more when the budget ends) so the
  /// strategy can run phase transitions that need no further rounds.
  virtual void prepare(const Graph&, Rng&) {}
  virtual Choice on_offer(const RoundOffer& offer, const Graph& g, Rng& rng) = 0;
  /// `added` is the inserted edge, or nullopt for Skip and discarded picks.
  virtual void on_applied(std::optional<Edge>, const Graph&, Rng&) {}
  virtual StrategyStatus status() const = 0;
};

/// Always picks candidate 0.
class FirstEdgeStrategy final : public Strategy {
 public:
  std::string name() const override { return "first-edge"; }
  std::vector<std::string> phase_names() const override { return {"first-edge"}; }
  std::size_t phase() const override { return 0; }
  Choice on_offer(const RoundOffer&, const Graph&, Rng&) override { return Choice::pick(0); }
  StrategyStatus status() const override { return {}; }
};

/// Always skips.
class SkipStrategy final : public Strategy {
 public:
  std::string name() const override { return "skip"; }
  std::vector<std::string> phase_names() const override { return {"skip"}; }
  std::size_t phase() const override { return 0; }
  Choice on_offer(const RoundOffer&, const Graph&, Rng&) override { return Choice::skip(); }
  StrategyStatus status() const override { return {}; }
};

struct EngineConfig {
  std::size_t n = 0;
  std::size_t k = 1;
  SamplingModel model = SamplingModel::RelaxedPairs;
  std::uint64_t seed = 0;
  bool record_ledger = false;
};

struct LedgerEntry {
  std::uint64_t round = 0;
  std::vector<Edge> candidates;
  std::optional<std::size_t> choice;
  /// The picked candidate was inserted (false for Skip, loops and duplicates).
  bool applied = false;
  std::size_t phase = 0;
};

/// The Achlioptas process: one graph, one offer stream, one round counter.
class Engine {
 public:
  /// Throws std::invalid_argument for n < 2 or k < 1.
  explicit Engine(const EngineConfig& config);

  const EngineConfig& config() const { return config_; }
  const Graph& graph() const { return graph_; }
  std::uint64_t rounds() const { return rounds_; }
  /// Picks that were not inserted because they were loops or present edges.
  std::uint64_t discarded() const { return discarded_; }
  const std::vector<LedgerEntry>& ledger() const { return ledger_; }
  Rng& strategy_rng() { return strategy_rng_; }

  /// Draws the next round's candidates without consuming the round.
  /// Throws std::runtime_error under ExactMissing when fewer than K edges are missing.
  RoundOffer next_offer();

  struct StepResult {
    RoundOffer offer;
    Choice choice;
    std::optional<Edge> added;
  };
  /// Draws an offer, asks the strategy, applies its choice and advances the
  /// round counter. Throws std::out_of_range for a pick index >= K.
  StepResult step(Strategy& strategy);
  /// Same as step() with a caller-supplied offer (ledger replay).
  StepResult step_with(RoundOffer offer, Strategy& strategy);

 private:
  EngineConfig config_;
  Graph graph_;
  Rng offer_rng_;
  Rng strategy_rng_;
  std::uint64_t rounds_ = 0;
  std::uint64_t discarded_ = 0;
  std::vector<LedgerEntry> ledger_;
};

enum class OutcomeKind {
  Hamiltonian,
  Completed,
  StopConditionMet,
  BudgetExhausted,
  PhaseFailed,
  NotCertified,
};

std::string_view to_string(OutcomeKind kind);

struct Outcome {
  OutcomeKind kind = OutcomeKind::BudgetExhausted;
  std::string phase;  // PhaseFailed only
  Cycle cycle;        // Hamiltonian only
};

struct PhaseRounds {
  std::string name;
  std::uint64_t rounds = 0;
};

struct RunRecord {
  std::uint64_t seed = 0;
  std::string rng_algorithm{kRngAlgorithm};
  std::string strategy;
  std::size_t n = 0;
  std::size_t k = 0;
  SamplingModel model = SamplingModel::RelaxedPairs;
  std::vector<PhaseRounds> phases;
  std::uint64_t total_rounds = 0;
  std::uint64_t discarded_rounds = 0;
  std::size_t final_edges = 0;
  std::uint64_t graph_fingerprint = 0;
  Outcome outcome;
  std::vector<LedgerEntry> ledger;
};

using StopPredicate = std::function<bool(const Graph&)>;

/// Steps until the strategy reaches a terminal state, `stop` holds, or
/// max_rounds rounds were played. A Hamiltonian outcome's cycle is checked
/// against the final graph (std::logic_error if it does not verify).
RunRecord run(Engine& engine, Strategy& strategy, const StopPredicate& stop,
              std::uint64_t max_rounds);
RunRecord run(const EngineConfig& config, Strategy& strategy, const StopPredicate& stop,
              std::uint64_t max_rounds);

}  // namespace achlioptas
