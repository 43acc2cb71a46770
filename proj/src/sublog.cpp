#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "achlioptas/algorithms.hpp"
#include "achlioptas/strategies.hpp"

namespace achlioptas {

SublogParams SublogParams::fidelity() { return SublogParams{}; }

SublogParams SublogParams::desk() {
  SublogParams p;
  p.epsilon = 0.5;
  p.core_degree = 3;
  p.core_round_factor = 0.6;
  p.bipartite_degree = 3;
  p.fill_stage_factor = 3.0;
  p.r_cap = 16;
  return p;
}

void SublogParams::validate(bool strict) const {
  if (!(epsilon > 0)) throw std::invalid_argument("sublog: epsilon must be positive");
  if (strict && !(epsilon < 0.01)) {
    throw std::invalid_argument("sublog: epsilon must lie in (0, 1/100) in fidelity mode");
  }
  if (core_degree < 1) throw std::invalid_argument("sublog: core degree D must be at least 1");
  if (bipartite_degree < 1) throw std::invalid_argument("sublog: bipartite degree d must be at least 1");
  if (!(core_round_factor > 0) || !(degree_stage_factor > 0) || !(fill_stage_factor > 0)) {
    throw std::invalid_argument("sublog: round factors must be positive");
  }
}

SublogPlan plan_sublog(const SublogParams& params, std::size_t n, double k) {
  params.validate();
  if (!(k > 0)) throw std::invalid_argument("sublog: K must be positive");
  const double nd = static_cast<double>(n);
  const double log_n = std::log(std::max(nd, 2.0));
  const double d = static_cast<double>(params.bipartite_degree);
  SublogPlan plan;
  plan.core_rounds = params.core_rounds.value_or(static_cast<std::uint64_t>(
      std::ceil(params.core_round_factor * static_cast<double>(params.core_degree) * nd)));
  plan.degree_stage_rounds = static_cast<std::uint64_t>(std::ceil(
      params.degree_stage_factor * params.epsilon / (2 * d * k) * nd * log_n));
  plan.degree_stage_rounds = std::max<std::uint64_t>(plan.degree_stage_rounds, 1);
  plan.fill_rounds = static_cast<std::uint64_t>(
      std::ceil(params.fill_stage_factor * (0.5 + params.epsilon) * (nd / k) * log_n));
  plan.boost_rounds = params.boost_rounds != 0
                          ? params.boost_rounds
                          : static_cast<std::uint64_t>(std::ceil(1e4 / k));
  plan.max_trials = params.max_trials != 0 ? params.max_trials : 2 * static_cast<std::uint64_t>(n);
  plan.r_cap = params.r_cap != 0 ? params.r_cap : std::max<std::size_t>(1, n / 100);
  return plan;
}

SublogStrategy::SublogStrategy(SublogParams params, std::size_t n, double k)
    : params_(params), plan_(plan_sublog(params, n, k)), n_(n) {}

std::vector<std::string> SublogStrategy::phase_names() const {
  return {"core", "bipartite", "rotation"};
}

std::size_t SublogStrategy::phase() const {
  switch (stage_) {
    case Stage::Start:
    case Stage::Core: return 0;
    case Stage::Degree:
    case Stage::Fill: return 1;
    case Stage::Boost:
    case Stage::Done: return 2;
  }
  return 2;
}

void SublogStrategy::fail(std::string phase) {
  status_.state = StrategyState::Failed;
  status_.failed_phase = std::move(phase);
  stage_ = Stage::Done;
}

void SublogStrategy::enter_degree_stage(const Graph& g) {
  const std::size_t d = params_.bipartite_degree;
  core_degree_.assign(n_, 0);
  level_count_.assign(d + 1, 0);
  deficient_ = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (core_.contains(v)) continue;
    std::size_t c = 0;
    for (Vertex w : g.neighbors(v)) c += core_.contains(w) ? 1 : 0;
    core_degree_[v] = c;
    if (c < d) {
      ++level_count_[c];
      ++deficient_;
    }
  }
  level_ = 0;
  stage_ = Stage::Degree;
  stage_rounds_ = 0;
}

void SublogStrategy::refresh_path(const Graph& g, Path seed_path) {
  const PosaResult result = extend_or_close(g, std::move(seed_path));
  if (result.hamilton_cycle) {
    status_.state = StrategyState::Succeeded;
    status_.cycle = *result.hamilton_cycle;
    stage_ = Stage::Done;
    return;
  }
  path_ = result.path;
  path_history_.push_back(path_.size());
  on_path_.assign(n_, 0);
  for (Vertex v : path_) on_path_[v] = 1;
  if (result.component_spanned) {
    boosters_ = BoosterSet{};
  } else {
    boosters_ = booster_pairs(g, path_, plan_.r_cap);
  }
  // A path spanning its component cannot grow through rotations; wait for an
  // edge leaving it instead.
  leave_component_ = boosters_.empty();
}

void SublogStrategy::enter_boost(const Graph& g, Rng& rng) {
  stage_ = Stage::Boost;
  stage_rounds_ = 0;
  if (n_ < 3) {
    fail("rotation");
    return;
  }
  refresh_path(g, greedy_path(g, static_cast<Vertex>(rng.uniform(n_)), rng));
}

void SublogStrategy::prepare(const Graph& g, Rng& rng) {
  if (status_.terminal()) return;
  while (true) {
    switch (stage_) {
      case Stage::Start:
        stage_ = Stage::Core;
        stage_rounds_ = 0;
        continue;
      case Stage::Core:
        if (stage_rounds_ < plan_.core_rounds) return;
        core_ = peel_core(g, params_.core_degree);
        if (core_.empty()) {
          fail("core");
          return;
        }
        enter_degree_stage(g);
        continue;
      case Stage::Degree:
        if (deficient_ == 0 || level_ >= params_.bipartite_degree) {
          stage_ = Stage::Fill;
          stage_rounds_ = 0;
          continue;
        }
        if (level_count_[level_] == 0 || stage_rounds_ >= plan_.degree_stage_rounds) {
          ++level_;
          stage_rounds_ = 0;
          continue;
        }
        return;
      case Stage::Fill:
        if (deficient_ == 0) {
          enter_boost(g, rng);
          continue;
        }
        if (stage_rounds_ >= plan_.fill_rounds) fail("bipartite");
        return;
      case Stage::Boost:
        if (stage_rounds_ >= plan_.boost_rounds) {
          ++trials_;
          stage_rounds_ = 0;
        }
        if (trials_ >= plan_.max_trials) fail("rotation");
        return;
      case Stage::Done:
        return;
    }
  }
}

bool SublogStrategy::wants(Edge e) const {
  const Vertex u = e.u;
  const Vertex v = e.v;
  switch (stage_) {
    case Stage::Degree:
    case Stage::Fill: {
      const bool u_in = core_.contains(u);
      const bool v_in = core_.contains(v);
      if (u_in == v_in) return false;
      const Vertex out = u_in ? v : u;
      const std::size_t c = core_degree_[out];
      if (stage_ == Stage::Degree) return c == level_;
      return c < params_.bipartite_degree;
    }
    case Stage::Boost:
      if (leave_component_) return on_path_[u] != on_path_[v];
      return boosters_.contains(e);
    default:
      return false;
  }
}

Choice SublogStrategy::on_offer(const RoundOffer& offer, const Graph& g, Rng& rng) {
  last_pick_.reset();
  if (stage_ == Stage::Core) {
    // The first insertable candidate: a uniform random new edge.
    for (std::size_t i = 0; i < offer.candidates.size(); ++i) {
      if (g.is_addable(offer.candidates[i])) return Choice::pick(i);
    }
    return Choice::skip();
  }
  if (stage_ == Stage::Done) return Choice::skip();
  const auto index = pick_preferred(offer, g, rng, [this](Edge e) { return wants(e); });
  if (!index) return Choice::skip();
  last_pick_ = offer.candidates[*index];
  if (stage_ == Stage::Boost && !leave_component_) {
    // The witness path is rebuilt before the pair becomes an edge, while the
    // closures that produced the booster set are still valid.
    witness_ = booster_witness(g, path_, boosters_, *last_pick_);
  }
  return Choice::pick(*index);
}

void SublogStrategy::on_applied(std::optional<Edge> added, const Graph& g, Rng&) {
  ++stage_rounds_;
  if (!added) return;
  if (stage_ == Stage::Degree || stage_ == Stage::Fill) {
    const bool u_in = core_.contains(added->u);
    const bool v_in = core_.contains(added->v);
    if (u_in != v_in) {
      const Vertex out = u_in ? added->v : added->u;
      const std::size_t c = core_degree_[out]++;
      const std::size_t d = params_.bipartite_degree;
      if (c < d) {
        --level_count_[c];
        if (c + 1 < d) {
          ++level_count_[c + 1];
        } else {
          --deficient_;
        }
      }
    }
    return;
  }
  if (stage_ == Stage::Boost && last_pick_ && *last_pick_ == *added) {
    ++trials_;
    stage_rounds_ = 0;
    Path seed = path_;
    if (!leave_component_ && witness_) seed = std::move(*witness_);
    witness_.reset();
    refresh_path(g, std::move(seed));
  }
}

}  // namespace achlioptas
