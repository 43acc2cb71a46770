#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "achlioptas/strategies.hpp"

namespace achlioptas {

DOutStrategy::DOutStrategy(DOutParams params, std::size_t n, double k)
    : params_(params), n_(n), out_(n), at_level_(params.d + 1, 0) {
  if (!(k > 0)) throw std::invalid_argument("d-out: K must be positive");
  if (!(params.epsilon > 0)) throw std::invalid_argument("d-out: epsilon must be positive");
  const double nd = static_cast<double>(n);
  const double d = static_cast<double>(std::max<std::size_t>(params.d, 1));
  level_budget_ = static_cast<std::uint64_t>(std::ceil((1 + params.epsilon / (2 * d)) * nd));
  fill_budget_ = static_cast<std::uint64_t>(
      std::ceil((1 + params.epsilon) * (nd / k) * std::log(std::max(nd, 2.0))));
  at_level_[0] = n;
  deficient_ = params.d == 0 ? 0 : n;
  if (deficient_ == 0) {
    stage_ = Stage::Done;
    status_.state = StrategyState::Completed;
  }
}

void DOutStrategy::prepare(const Graph&, Rng&) {
  if (status_.terminal()) return;
  if (deficient_ == 0) {
    stage_ = Stage::Done;
    status_.state = StrategyState::Completed;
    return;
  }
  if (stage_ == Stage::Level) {
    while (level_ < params_.d && (at_level_[level_] == 0 || stage_rounds_ >= level_budget_)) {
      ++level_;
      stage_rounds_ = 0;
    }
    if (level_ >= params_.d) {
      stage_ = Stage::Fill;
      stage_rounds_ = 0;
    }
  }
  if (stage_ == Stage::Fill && stage_rounds_ >= fill_budget_) {
    stage_ = Stage::Done;
    status_.state = StrategyState::Failed;
    status_.failed_phase = "stage-2";
  }
}

bool DOutStrategy::pickable(Edge e, std::size_t level) const {
  if (e.u == e.v) return false;
  const auto& out = out_[e.u];
  if (out.size() >= params_.d) return false;
  if (level < params_.d && out.size() != level) return false;
  return std::find(out.begin(), out.end(), e.v) == out.end();
}

Choice DOutStrategy::on_offer(const RoundOffer& offer, const Graph&, Rng& rng) {
  last_pick_.reset();
  if (stage_ == Stage::Done) return Choice::skip();
  // Stage 2 is encoded as level d: any first coordinate with fewer than d out-neighbors.
  const std::size_t level = stage_ == Stage::Fill ? params_.d : level_;
  // Only the first coordinate matters; a pair whose undirected edge already
  // exists still records the out-neighbor (the engine discards the insert).
  // Preferred candidates first; during the level stage any other deficient
  // first coordinate is the fallback.
  std::size_t found = 0;
  std::size_t chosen = 0;
  std::size_t fallback_found = 0;
  std::size_t fallback = 0;
  for (std::size_t i = 0; i < offer.candidates.size(); ++i) {
    const Edge e = offer.candidates[i];
    if (pickable(e, level)) {
      ++found;
      if (found == 1 || rng.uniform(found) == 0) chosen = i;
    } else if (found == 0 && level < params_.d && pickable(e, params_.d)) {
      ++fallback_found;
      if (fallback_found == 1 || rng.uniform(fallback_found) == 0) fallback = i;
    }
  }
  if (found == 0) {
    if (fallback_found == 0) return Choice::skip();
    chosen = fallback;
  }
  last_pick_ = offer.candidates[chosen];
  return Choice::pick(chosen);
}

void DOutStrategy::on_applied(std::optional<Edge>, const Graph&, Rng&) {
  ++stage_rounds_;
  if (!last_pick_) return;
  const Vertex u = last_pick_->u;
  auto& out = out_[u];
  const std::size_t before = out.size();
  out.push_back(last_pick_->v);
  --at_level_[before];
  ++at_level_[before + 1];
  if (before + 1 == params_.d) --deficient_;
  last_pick_.reset();
}

IntermediateStrategy::IntermediateStrategy(DOutParams params, std::size_t n, double k)
    : DOutStrategy(params, n, k) {}

void IntermediateStrategy::prepare(const Graph& g, Rng& rng) {
  DOutStrategy::prepare(g, rng);
  if (status_.state != StrategyState::Completed || certified_) return;
  certified_ = true;
  if (auto cycle = hamiltonicity_search(g, params_.certify_restarts, rng.next())) {
    status_.state = StrategyState::Succeeded;
    status_.cycle = std::move(*cycle);
  } else {
    status_.state = StrategyState::NotCertified;
  }
}

}  // namespace achlioptas
