#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "achlioptas/algorithms.hpp"
#include "achlioptas/strategies.hpp"

namespace achlioptas {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

double log_n(std::size_t n) { return std::log(std::max<double>(static_cast<double>(n), 2.0)); }

// Largest connected piece of the subgraph induced by `s` (ties: smallest first vertex).
VertexSet largest_component(const Graph& g, const VertexSet& s) {
  VertexSet best(g.vertex_count());
  VertexSet seen(g.vertex_count());
  std::vector<Vertex> stack;
  for (Vertex root : s.members()) {
    if (seen.contains(root)) continue;
    VertexSet comp(g.vertex_count());
    stack.assign(1, root);
    seen.insert(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex w : g.neighbors(v)) {
        if (s.contains(w) && seen.insert(w)) stack.push_back(w);
      }
    }
    if (comp.size() > best.size()) best = std::move(comp);
  }
  return best;
}

}  // namespace

SuperlogParams SuperlogParams::fidelity() { return SuperlogParams{}; }

SuperlogParams SuperlogParams::desk() {
  SuperlogParams p;
  p.h = 7;
  p.paths = 20;
  p.expander_degree = 8;
  p.expander_round_factor = 1.0;
  p.resilient_degree = 3;
  p.inner = SublogParams::desk();
  p.inner.core_degree = 3;
  p.inner.core_rounds = 0;
  p.inner.r_cap = 8;
  return p;
}

SuperlogPlan plan_superlog(const SuperlogParams& params, std::size_t n, std::size_t k) {
  const double nd = static_cast<double>(n);
  const double ln = log_n(n);
  SuperlogPlan plan;
  plan.h = params.h > 0 ? params.h : std::pow(static_cast<double>(k) / ln, 0.1);
  if (!(plan.h > 1)) {
    throw std::invalid_argument("superlog: h must exceed 1 (K=" + std::to_string(k) +
                                " gives h=" + std::to_string(plan.h) + "; set h explicitly)");
  }
  const double h2 = plan.h * plan.h;
  plan.m = params.m != 0 ? params.m : static_cast<std::size_t>(std::floor(nd / h2));
  plan.paths = params.paths != 0 ? params.paths
                                 : static_cast<std::size_t>(std::floor(nd / (h2 * h2 * ln)));
  if (plan.m < 3) throw std::invalid_argument("superlog: m must be at least 3");
  if (plan.paths < 1) throw std::invalid_argument("superlog: the number of paths L must be at least 1");
  if (plan.m + plan.paths >= n) throw std::invalid_argument("superlog: n must exceed m + L");
  if (params.expander_degree < 1) throw std::invalid_argument("superlog: D_exp must be at least 1");
  plan.cover_rounds = static_cast<std::uint64_t>(std::ceil((1 + std::exp(-plan.h)) * nd));
  plan.expander_rounds = static_cast<std::uint64_t>(std::ceil(
      params.expander_round_factor * static_cast<double>(params.expander_degree) *
      static_cast<double>(plan.m)));
  plan.resilient_degree =
      params.resilient_degree != 0 ? params.resilient_degree : params.expander_degree;
  plan.inner_k = params.inner_k > 0 ? params.inner_k : ln / plan.h;
  const double h7 = std::pow(plan.h, 7);
  plan.closing_rounds =
      params.closing_rounds != 0
          ? params.closing_rounds
          : std::max<std::uint64_t>(
                static_cast<std::uint64_t>(std::floor(nd / (2 * h7))),
                static_cast<std::uint64_t>(std::ceil(
                    ln * nd * nd / (static_cast<double>(k) * static_cast<double>(plan.m)))));
  plan.collect_rounds = static_cast<std::uint64_t>(std::ceil(nd / h2));
  plan.patch_rounds = static_cast<std::uint64_t>(std::ceil(nd / ln));
  params.inner.validate();
  return plan;
}

SuperlogStrategy::SuperlogStrategy(SuperlogParams params, std::size_t n, std::size_t k)
    : params_(std::move(params)), plan_(plan_superlog(params_, n, k)), n_(n), k_(k) {}

std::vector<std::string> SuperlogStrategy::phase_names() const {
  return {"path-cover", "expander", "joining", "inner", "merge"};
}

std::size_t SuperlogStrategy::phase() const {
  switch (stage_) {
    case Stage::Start:
    case Stage::Cover: return 0;
    case Stage::Expander: return 1;
    case Stage::Join:
    case Stage::Close: return 2;
    case Stage::Inner: return 3;
    case Stage::Collect:
    case Stage::Patch:
    case Stage::Done: return 4;
  }
  return 4;
}

void SuperlogStrategy::fail(std::string phase) {
  status_.state = StrategyState::Failed;
  status_.failed_phase = std::move(phase);
  stage_ = Stage::Done;
}

void SuperlogStrategy::start(const Graph&, Rng& rng) {
  std::vector<Vertex> order(n_);
  for (Vertex v = 0; v < n_; ++v) order[v] = v;
  // Partial Fisher-Yates: the first L entries are a uniform L-subset.
  for (std::size_t i = 0; i < plan_.paths; ++i) {
    std::swap(order[i], order[i + rng.uniform(n_ - i)]);
  }
  cover_.paths.clear();
  cover_.covered = VertexSet(n_);
  left_of_.assign(n_, kNone);
  for (std::size_t i = 0; i < plan_.paths; ++i) {
    cover_.paths.push_back({order[i]});
    cover_.covered.insert(order[i]);
    left_of_[order[i]] = i;
  }
  max_paths_seen_ = cover_.paths.size();
  stage_ = Stage::Cover;
  stage_rounds_ = 0;
}

void SuperlogStrategy::index_ends() {
  end_of_.assign(n_, kNone);
  for (std::size_t i = 0; i < cover_.paths.size(); ++i) {
    end_of_[cover_.paths[i].front()] = i;
    end_of_[cover_.paths[i].back()] = i;
  }
}

void SuperlogStrategy::refresh_connector_set(const Graph& g) {
  VertexSet avail = expander_;
  for (Vertex v : used_) avail.erase(v);
  connector_ = largest_component(g, peel_core(g, plan_.resilient_degree, avail));
}

void SuperlogStrategy::finish_expander(const Graph& g) {
  const VertexSet uncovered = cover_.covered.complement();
  expander_ = peel_core(g, params_.expander_degree, uncovered);
  if (3 * expander_.size() < 2 * plan_.m) {
    fail("expander");
    return;
  }
  used_.clear();
  refresh_connector_set(g);
  index_ends();
  level_ = 0;
  begin_level();
}

void SuperlogStrategy::begin_level() {
  const double size = static_cast<double>(cover_.paths.size());
  const double l = static_cast<double>(plan_.paths);
  // Level i holds while a_i >= |P| > a_{i+1}, with a_i = L 2^-i.
  while (l / std::pow(2.0, static_cast<double>(level_ + 1)) >= size && level_ < 64) ++level_;
  const double a = l / std::pow(2.0, static_cast<double>(level_));
  level_attempts_ = 0;
  level_attempt_cap_ = static_cast<std::uint64_t>(std::ceil(plan_.h * a));
  step_rounds_ = 0;
  first_hook_.reset();
  stage_ = cover_.paths.size() > 1 ? Stage::Join : Stage::Close;
  if (stage_ == Stage::Close) level_attempt_cap_ = static_cast<std::uint64_t>(std::ceil(plan_.h));
}

void SuperlogStrategy::join(const Graph& g) {
  const Hook h1 = *first_hook_;
  const Hook h2 = *pending_;
  first_hook_.reset();
  pending_.reset();
  const auto connector = shortest_path(g, h1.anchor, h2.anchor, connector_);
  if (!connector) {
    fail("joining");
    return;
  }
  Path p1 = cover_.paths[h1.path];
  Path p2 = cover_.paths[h2.path];
  if (p1.back() != h1.end) std::reverse(p1.begin(), p1.end());
  if (p2.front() != h2.end) std::reverse(p2.begin(), p2.end());
  Path joined = std::move(p1);
  joined.insert(joined.end(), connector->begin(), connector->end());
  joined.insert(joined.end(), p2.begin(), p2.end());
  for (Vertex v : *connector) {
    used_.push_back(v);
    cover_.covered.insert(v);
  }
  longest_connector_ = std::max(longest_connector_, connector->size() + 1);
  ++joins_;
  const std::size_t hi = std::max(h1.path, h2.path);
  const std::size_t lo = std::min(h1.path, h2.path);
  cover_.paths.erase(cover_.paths.begin() + static_cast<std::ptrdiff_t>(hi));
  cover_.paths.erase(cover_.paths.begin() + static_cast<std::ptrdiff_t>(lo));
  cover_.paths.push_back(std::move(joined));
  index_ends();
  refresh_connector_set(g);
  if (connector_.empty()) {
    fail("joining");
    return;
  }
  const double a_next =
      static_cast<double>(plan_.paths) / std::pow(2.0, static_cast<double>(level_ + 1));
  if (cover_.paths.size() == 1 || static_cast<double>(cover_.paths.size()) <= a_next) {
    begin_level();
  } else {
    ++level_attempts_;
    step_rounds_ = 0;
  }
}

void SuperlogStrategy::close_cycle(const Graph& g) {
  const Hook front = *first_hook_;
  const Hook back = *pending_;
  first_hook_.reset();
  pending_.reset();
  const auto connector = shortest_path(g, back.anchor, front.anchor, connector_);
  if (!connector) {
    fail("joining");
    return;
  }
  Cycle cycle = cover_.paths.front();
  cycle.insert(cycle.end(), connector->begin(), connector->end());
  if (!is_valid_cycle(g, cycle)) throw std::logic_error("superlog: closed path is not a cycle");
  for (Vertex v : *connector) {
    used_.push_back(v);
    cover_.covered.insert(v);
  }
  longest_connector_ = std::max(longest_connector_, connector->size() + 1);
  cycle_y_ = std::move(cycle);
  enter_inner(g);
}

void SuperlogStrategy::enter_inner(const Graph& g) {
  inner_vertices_.clear();
  inner_index_.assign(n_, kNone);
  for (Vertex v = 0; v < n_; ++v) {
    if (cover_.covered.contains(v)) continue;
    inner_index_[v] = inner_vertices_.size();
    inner_vertices_.push_back(v);
  }
  if (inner_vertices_.size() < 3) {
    fail("inner");
    return;
  }
  inner_graph_ = g.induced(inner_vertices_);
  inner_ = std::make_unique<SublogStrategy>(params_.inner, inner_vertices_.size(), plan_.inner_k);
  stage_ = Stage::Inner;
  stage_rounds_ = 0;
}

void SuperlogStrategy::enter_merge() {
  in_x_ = VertexSet(n_);
  for (Vertex v : cycle_x_) in_x_.insert(v);
  next_.assign(n_, 0);
  for (const Cycle* c : {&cycle_x_, &cycle_y_}) {
    for (std::size_t i = 0; i < c->size(); ++i) next_[(*c)[i]] = (*c)[(i + 1) % c->size()];
  }
  cut_edges_.clear();
  stage_ = Stage::Collect;
  stage_rounds_ = 0;
}

void SuperlogStrategy::try_patch(const Graph& g) {
  for (const Edge& e : cut_edges_) {
    if (g.has_edge(next_[e.u], next_[e.v])) {
      status_.state = StrategyState::Succeeded;
      status_.cycle = patch_cycles(cycle_x_, cycle_y_, e.u, e.v);
      stage_ = Stage::Done;
      return;
    }
  }
}

void SuperlogStrategy::prepare(const Graph& g, Rng& rng) {
  if (status_.terminal()) return;
  while (true) {
    switch (stage_) {
      case Stage::Start:
        start(g, rng);
        continue;
      case Stage::Cover:
        if (cover_.covered.size() + plan_.m >= n_) {
          stage_ = Stage::Expander;
          stage_rounds_ = 0;
          continue;
        }
        if (stage_rounds_ >= plan_.cover_rounds) fail("path-cover");
        return;
      case Stage::Expander:
        if (stage_rounds_ < plan_.expander_rounds) return;
        finish_expander(g);
        if (status_.terminal()) return;
        continue;
      case Stage::Join:
      case Stage::Close: {
        const double a =
            static_cast<double>(plan_.paths) / std::pow(2.0, static_cast<double>(level_));
        const std::uint64_t budget =
            stage_ == Stage::Close
                ? plan_.closing_rounds
                : static_cast<std::uint64_t>(std::ceil(
                      2 * static_cast<double>(n_) * plan_.h * plan_.h /
                      (a * static_cast<double>(k_))));
        if (step_rounds_ >= budget) {
          // The attempt failed: both hooks are dropped.
          first_hook_.reset();
          ++level_attempts_;
          step_rounds_ = 0;
        }
        if (level_attempts_ >= level_attempt_cap_) fail("joining");
        return;
      }
      case Stage::Inner: {
        inner_->prepare(inner_graph_, rng);
        const StrategyStatus s = inner_->status();
        if (s.state == StrategyState::Running) return;
        if (s.state != StrategyState::Succeeded) {
          fail("inner");
          return;
        }
        cycle_x_.clear();
        for (Vertex v : s.cycle) cycle_x_.push_back(inner_vertices_[v]);
        enter_merge();
        continue;
      }
      case Stage::Collect:
        if (stage_rounds_ < plan_.collect_rounds) return;
        try_patch(g);
        if (status_.terminal()) return;
        plus_index_.clear();
        for (std::size_t i = 0; i < cut_edges_.size(); ++i) {
          const Edge& e = cut_edges_[i];
          plus_index_.emplace_back(edge_key({next_[e.u], next_[e.v]}), i);
        }
        std::sort(plus_index_.begin(), plus_index_.end());
        stage_ = Stage::Patch;
        stage_rounds_ = 0;
        continue;
      case Stage::Patch:
        if (stage_rounds_ >= plan_.patch_rounds) fail("merge");
        return;
      case Stage::Done:
        return;
    }
  }
}

Choice SuperlogStrategy::on_offer(const RoundOffer& offer, const Graph& g, Rng& rng) {
  last_pick_.reset();
  std::optional<std::size_t> index;
  switch (stage_) {
    case Stage::Cover: {
      const auto& covered = cover_.covered;
      index = pick_preferred(offer, g, rng, [&](Edge e) {
        return (left_of_[e.u] != kNone && !covered.contains(e.v)) ||
               (left_of_[e.v] != kNone && !covered.contains(e.u));
      });
      break;
    }
    case Stage::Expander:
      for (std::size_t i = 0; i < offer.candidates.size(); ++i) {
        const Edge e = offer.candidates[i];
        if (!cover_.covered.contains(e.u) && !cover_.covered.contains(e.v) && g.is_addable(e)) {
          index = i;
          break;
        }
      }
      break;
    case Stage::Join: {
      const std::size_t excluded = first_hook_ ? first_hook_->path : kNone;
      index = pick_preferred(offer, g, rng, [&](Edge e) {
        const auto hooks = [&](Vertex end, Vertex x) {
          const std::size_t p = end_of_[end];
          return p != kNone && p != excluded && connector_.contains(x);
        };
        return hooks(e.u, e.v) || hooks(e.v, e.u);
      });
      break;
    }
    case Stage::Close: {
      const Path& p = cover_.paths.front();
      const Vertex end = first_hook_ ? p.back() : p.front();
      index = pick_preferred(offer, g, rng, [&](Edge e) {
        return (e.u == end && connector_.contains(e.v)) || (e.v == end && connector_.contains(e.u));
      });
      break;
    }
    case Stage::Inner: {
      RoundOffer local;
      local.round_index = offer.round_index;
      inner_offer_map_.clear();
      for (std::size_t i = 0; i < offer.candidates.size(); ++i) {
        const Edge e = offer.candidates[i];
        const std::size_t a = inner_index_[e.u];
        const std::size_t b = inner_index_[e.v];
        if (a == kNone || b == kNone) continue;
        local.candidates.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        inner_offer_map_.push_back(i);
      }
      // Rounds without a candidate inside the leftover set are not shown to the inner run.
      if (local.candidates.empty()) return Choice::skip();
      const Choice c = inner_->on_offer(local, inner_graph_, rng);
      inner_offered_ = true;
      if (c.is_skip()) return c;
      index = inner_offer_map_.at(c.index());
      break;
    }
    case Stage::Collect:
      index = pick_preferred(offer, g, rng,
                             [&](Edge e) { return in_x_.contains(e.u) != in_x_.contains(e.v); });
      break;
    case Stage::Patch:
      index = pick_preferred(offer, g, rng, [&](Edge e) {
        const auto key = edge_key(e);
        const auto it = std::lower_bound(plus_index_.begin(), plus_index_.end(),
                                         std::pair<std::uint64_t, std::size_t>{key, 0});
        return it != plus_index_.end() && it->first == key;
      });
      break;
    default:
      break;
  }
  if (!index) return Choice::skip();
  last_pick_ = offer.candidates[*index];
  return Choice::pick(*index);
}

void SuperlogStrategy::on_applied(std::optional<Edge> added, const Graph& g, Rng& rng) {
  if (stage_ == Stage::Inner) {
    if (!inner_offered_) return;
    inner_offered_ = false;
    std::optional<Edge> local;
    if (added) {
      local = Edge{static_cast<Vertex>(inner_index_[added->u]),
                   static_cast<Vertex>(inner_index_[added->v])};
      inner_graph_.add_edge(*local);
    }
    inner_->on_applied(local, inner_graph_, rng);
    return;
  }
  ++stage_rounds_;
  ++step_rounds_;
  if (!added || !last_pick_) return;
  const Edge e = *added;
  switch (stage_) {
    case Stage::Cover: {
      const bool u_left = left_of_[e.u] != kNone && !cover_.covered.contains(e.v);
      const Vertex left = u_left ? e.u : e.v;
      const Vertex fresh = u_left ? e.v : e.u;
      const std::size_t p = left_of_[left];
      cover_.paths[p].push_back(fresh);
      cover_.covered.insert(fresh);
      left_of_[left] = kNone;
      left_of_[fresh] = p;
      break;
    }
    case Stage::Join:
    case Stage::Close: {
      const bool u_end = stage_ == Stage::Join ? end_of_[e.u] != kNone && connector_.contains(e.v)
                                               : connector_.contains(e.v);
      const Vertex end = u_end ? e.u : e.v;
      const Vertex anchor = u_end ? e.v : e.u;
      const Hook hook{end_of_[end], end, anchor};
      step_rounds_ = 0;
      if (!first_hook_) {
        first_hook_ = hook;
        return;
      }
      pending_ = hook;
      if (stage_ == Stage::Join) {
        join(g);
      } else {
        close_cycle(g);
      }
      break;
    }
    case Stage::Collect:
      cut_edges_.push_back(in_x_.contains(e.u) ? e : Edge{e.v, e.u});
      break;
    case Stage::Patch: {
      const auto key = edge_key(e);
      const auto it = std::lower_bound(plus_index_.begin(), plus_index_.end(),
                                       std::pair<std::uint64_t, std::size_t>{key, 0});
      const Edge& cut = cut_edges_[it->second];
      status_.state = StrategyState::Succeeded;
      status_.cycle = patch_cycles(cycle_x_, cycle_y_, cut.u, cut.v);
      stage_ = Stage::Done;
      break;
    }
    default:
      break;
  }
}

}  // namespace achlioptas
