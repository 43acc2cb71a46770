#include "achlioptas/engine.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace achlioptas {

std::string_view to_string(SamplingModel model) {
  return model == SamplingModel::ExactMissing ? "exact" : "relaxed";
}

SamplingModel parse_sampling_model(std::string_view text) {
  if (text == "exact") return SamplingModel::ExactMissing;
  if (text == "relaxed") return SamplingModel::RelaxedPairs;
  throw std::invalid_argument("unknown sampling model '" + std::string(text) +
                              "' (expected exact or relaxed)");
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Hamiltonian: return "hamiltonian";
    case OutcomeKind::Completed: return "completed";
    case OutcomeKind::StopConditionMet: return "stop-condition";
    case OutcomeKind::BudgetExhausted: return "budget-exhausted";
    case OutcomeKind::PhaseFailed: return "phase-failed";
    case OutcomeKind::NotCertified: return "not-certified";
  }
  return "unknown";
}

Engine::Engine(const EngineConfig& config)
    : config_(config),
      graph_(config.n),
      offer_rng_(config.seed, "offers"),
      strategy_rng_(config.seed, "strategy") {
  if (config.n < 2) throw std::invalid_argument("engine: n must be at least 2");
  if (config.k < 1) throw std::invalid_argument("engine: K must be at least 1");
}

RoundOffer Engine::next_offer() {
  const std::size_t n = config_.n;
  const std::size_t k = config_.k;
  RoundOffer offer;
  offer.round_index = rounds_;
  offer.candidates.reserve(k);
  if (config_.model == SamplingModel::RelaxedPairs) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto u = static_cast<Vertex>(offer_rng_.uniform(n));
      const auto v = static_cast<Vertex>(offer_rng_.uniform(n));
      offer.candidates.push_back({u, v});
    }
    return offer;
  }

  const std::uint64_t possible = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (possible - graph_.edge_count() < k) {
    throw std::runtime_error("exact sampling: only " +
                             std::to_string(possible - graph_.edge_count()) +
                             " missing edges left, K=" + std::to_string(k));
  }
  std::unordered_set<std::uint64_t> taken;
  while (offer.candidates.size() < k) {
    const auto u = static_cast<Vertex>(offer_rng_.uniform(n));
    const auto v = static_cast<Vertex>(offer_rng_.uniform(n));
    if (u == v || graph_.has_edge(u, v)) continue;
    const Edge e = Edge{u, v}.normalized();
    if (!taken.insert(edge_key(e)).second) continue;
    offer.candidates.push_back(e);
  }
  return offer;
}

Engine::StepResult Engine::step(Strategy& strategy) { return step_with(next_offer(), strategy); }

Engine::StepResult Engine::step_with(RoundOffer offer, Strategy& strategy) {
  offer.round_index = rounds_;
  const std::size_t phase = strategy.phase();
  const Choice choice = strategy.on_offer(offer, graph_, strategy_rng_);
  std::optional<Edge> added;
  if (!choice.is_skip()) {
    if (choice.index() >= offer.candidates.size()) {
      throw std::out_of_range("strategy '" + strategy.name() + "' picked candidate " +
                              std::to_string(choice.index()) + " of " +
                              std::to_string(offer.candidates.size()));
    }
    const Edge e = offer.candidates[choice.index()];
    if (graph_.add_edge(e)) {
      added = e;
    } else {
      ++discarded_;
    }
  }
  ++rounds_;
  strategy.on_applied(added, graph_, strategy_rng_);
  if (config_.record_ledger) {
    ledger_.push_back({offer.round_index, offer.candidates, choice.raw(), added.has_value(), phase});
  }
  return {std::move(offer), choice, added};
}

RunRecord run(const EngineConfig& config, Strategy& strategy, const StopPredicate& stop,
              std::uint64_t max_rounds) {
  Engine engine(config);
  return run(engine, strategy, stop, max_rounds);
}

RunRecord run(Engine& engine, Strategy& strategy, const StopPredicate& stop,
              std::uint64_t max_rounds) {
  const auto names = strategy.phase_names();
  std::vector<std::uint64_t> per_phase(names.size(), 0);
  std::optional<Outcome> outcome;

  auto settle = [&]() -> bool {
    strategy.prepare(engine.graph(), engine.strategy_rng());
    const StrategyStatus status = strategy.status();
    switch (status.state) {
      case StrategyState::Running:
        if (stop && stop(engine.graph())) {
          outcome = Outcome{OutcomeKind::StopConditionMet, {}, {}};
          return true;
        }
        return false;
      case StrategyState::Succeeded:
        outcome = Outcome{OutcomeKind::Hamiltonian, {}, status.cycle};
        return true;
      case StrategyState::Completed:
        outcome = Outcome{OutcomeKind::Completed, {}, {}};
        return true;
      case StrategyState::Failed:
        outcome = Outcome{OutcomeKind::PhaseFailed, status.failed_phase, {}};
        return true;
      case StrategyState::NotCertified:
        outcome = Outcome{OutcomeKind::NotCertified, {}, {}};
        return true;
    }
    return false;
  };

  std::uint64_t played = 0;
  while (!settle() && played < max_rounds) {
    const std::size_t phase = strategy.phase();
    engine.step(strategy);
    if (phase < per_phase.size()) ++per_phase[phase];
    ++played;
  }
  if (!outcome) outcome = Outcome{OutcomeKind::BudgetExhausted, {}, {}};

  if (outcome->kind == OutcomeKind::Hamiltonian &&
      !verify_hamilton_cycle(engine.graph(), outcome->cycle)) {
    throw std::logic_error("strategy '" + strategy.name() +
                           "' reported a Hamilton cycle that does not verify");
  }

  RunRecord record;
  record.seed = engine.config().seed;
  record.strategy = strategy.name();
  record.n = engine.config().n;
  record.k = engine.config().k;
  record.model = engine.config().model;
  for (std::size_t i = 0; i < names.size(); ++i) record.phases.push_back({names[i], per_phase[i]});
  record.total_rounds = played;
  record.discarded_rounds = engine.discarded();
  record.final_edges = engine.graph().edge_count();
  record.graph_fingerprint = engine.graph().fingerprint();
  record.outcome = std::move(*outcome);
  record.ledger = engine.ledger();
  return record;
}

}  // namespace achlioptas
