#pragma once

// Online strategies for the Achlioptas process and offline analyzers of
// recorded offer streams.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "achlioptas/engine.hpp"
#include "achlioptas/graph.hpp"
#include "achlioptas/posa.hpp"
#include "achlioptas/rng.hpp"

namespace achlioptas {

/// Parameter sets: the asymptotic constants, or values that give meaningful
/// runs at n in the thousands.
enum class Preset { Fidelity, Desk };

std::string_view to_string(Preset preset);
/// Accepts "fidelity" / "desk". Throws std::invalid_argument otherwise.
Preset parse_preset(std::string_view text);

/// Index of a uniformly chosen candidate that could be inserted and satisfies
/// `want`, or nullopt when there is none.
template <typename Pred>
std::optional<std::size_t> pick_preferred(const RoundOffer& offer, const Graph& g, Rng& rng,
                                          Pred&& want) {
  std::size_t found = 0;
  std::size_t chosen = 0;
  // Reservoir sampling keeps a single pass over large offers.
  for (std::size_t i = 0; i < offer.candidates.size(); ++i) {
    const Edge e = offer.candidates[i];
    if (!want(e) || !g.is_addable(e)) continue;
    ++found;
    if (found == 1 || rng.uniform(found) == 0) chosen = i;
  }
  if (found == 0) return std::nullopt;
  return chosen;
}

// ---------------------------------------------------------------------------
// Sub-logarithmic regime

struct SublogParams {
  double epsilon = 0.009;
  /// D: core degree of the phase-1 graph.
  std::size_t core_degree = 112;
  /// Phase 1 lasts ceil(core_round_factor * D * n) rounds unless core_rounds is set.
  double core_round_factor = 0.75;
  std::optional<std::uint64_t> core_rounds;
  /// d: required number of neighbors inside the core for vertices outside it.
  std::size_t bipartite_degree = 20;
  /// Multipliers of the two greedy stage budgets.
  double degree_stage_factor = 1.0;
  double fill_stage_factor = 1.0;
  /// Rounds per booster trial; 0 means ceil(10^4 / K).
  std::uint64_t boost_rounds = 0;
  /// 0 means 2n.
  std::uint64_t max_trials = 0;
  /// Endpoints whose second closures contribute booster pairs; 0 means max(1, n/100).
  std::size_t r_cap = 0;

  static SublogParams fidelity();
  static SublogParams desk();
  static SublogParams preset(Preset p) { return p == Preset::Fidelity ? fidelity() : desk(); }

  /// Throws std::invalid_argument for non-positive values, or epsilon outside
  /// (0, 1/100) when `strict` is set.
  void validate(bool strict = false) const;
};

/// Round budgets of a sublog run, resolved for a given n and K.
struct SublogPlan {
  std::uint64_t core_rounds = 0;
  std::uint64_t degree_stage_rounds = 0;  // per degree level j
  std::uint64_t fill_rounds = 0;
  std::uint64_t boost_rounds = 0;
  std::uint64_t max_trials = 0;
  std::size_t r_cap = 0;
};

SublogPlan plan_sublog(const SublogParams& params, std::size_t n, double k);

/// Phase 1 builds a random graph and takes its D-core H. Phase 2 gives every
/// vertex outside H at least d neighbors in H, first level by level, then by
/// filling the remaining deficient set. Phase 3 grows a longest path by
/// rotations and waits for offered booster pairs until a Hamilton cycle closes.
class SublogStrategy final : public Strategy {
 public:
  /// `k` is the number of candidates per round used for budget planning.
  SublogStrategy(SublogParams params, std::size_t n, double k);

  std::string name() const override { return "sublog"; }
  std::vector<std::string> phase_names() const override;
  std::size_t phase() const override;
  void prepare(const Graph& g, Rng& rng) override;
  Choice on_offer(const RoundOffer& offer, const Graph& g, Rng& rng) override;
  void on_applied(std::optional<Edge> added, const Graph& g, Rng& rng) override;
  StrategyStatus status() const override { return status_; }

  const SublogPlan& plan() const { return plan_; }
  /// Vertex set of the core H (empty before phase 1 ends).
  const VertexSet& core() const { return core_; }
  /// Current longest path of phase 3.
  const Path& path() const { return path_; }
  /// Completed booster trials (hits and timeouts).
  std::uint64_t trials() const { return trials_; }
  /// Path lengths (vertex counts) recorded after every successful trial.
  const std::vector<std::size_t>& path_history() const { return path_history_; }

 private:
  enum class Stage { Start, Core, Degree, Fill, Boost, Done };

  void enter_degree_stage(const Graph& g);
  void advance_degree_level();
  void enter_boost(const Graph& g, Rng& rng);
  void refresh_path(const Graph& g, Path seed_path);
  bool wants(Edge e) const;
  void fail(std::string phase);

  SublogParams params_;
  SublogPlan plan_;
  std::size_t n_;
  Stage stage_ = Stage::Start;
  std::uint64_t stage_rounds_ = 0;
  StrategyStatus status_;

  VertexSet core_;
  // Edges from each outside vertex into the core, and counts per level.
  std::vector<std::size_t> core_degree_;
  std::vector<std::size_t> level_count_;
  std::size_t level_ = 0;
  std::size_t deficient_ = 0;

  Path path_;
  std::vector<std::uint8_t> on_path_;
  BoosterSet boosters_;
  bool leave_component_ = false;
  std::uint64_t trials_ = 0;
  std::vector<std::size_t> path_history_;
  std::optional<Edge> last_pick_;
  std::optional<Path> witness_;
};

// ---------------------------------------------------------------------------
// Super-logarithmic regime

struct SuperlogParams {
  /// 0 derives h from K = h^10 ln n.
  double h = 0;
  /// 0 means floor(n / h^2).
  std::size_t m = 0;
  /// Number of paths L seeded in phase 1; 0 means floor(n / (h^4 ln n)).
  std::size_t paths = 0;
  /// D of the expander core built on the uncovered vertices.
  std::size_t expander_degree = 2000;
  /// Phase 2 lasts ceil(expander_round_factor * D * m) rounds.
  double expander_round_factor = 0.75;
  /// Core degree used when re-deriving the connector set after removals; 0 means expander_degree.
  std::size_t resilient_degree = 0;
  /// Candidates per round assumed by the inner sublog run; 0 means ln n / h.
  double inner_k = 0;
  /// Parameters of the inner sublog run on the leftover vertices.
  SublogParams inner = SublogParams::fidelity();
  /// Rounds per hook attempt when closing the last path; 0 derives it.
  std::uint64_t closing_rounds = 0;

  static SuperlogParams fidelity();
  static SuperlogParams desk();
  static SuperlogParams preset(Preset p) { return p == Preset::Fidelity ? fidelity() : desk(); }
};

struct SuperlogPlan {
  double h = 0;
  std::size_t m = 0;
  std::size_t paths = 0;
  std::uint64_t cover_rounds = 0;
  std::uint64_t expander_rounds = 0;
  std::size_t resilient_degree = 0;
  double inner_k = 0;
  std::uint64_t closing_rounds = 0;
  std::uint64_t collect_rounds = 0;
  std::uint64_t patch_rounds = 0;
};

/// Throws std::invalid_argument unless h > 1, m >= 3, L >= 1 and n - m > L.
SuperlogPlan plan_superlog(const SuperlogParams& params, std::size_t n, std::size_t k);

/// Vertex-disjoint paths covering Y.
struct PathCover {
  std::vector<Path> paths;
  VertexSet covered;

  /// Paths are disjoint, valid in g, and their union is `covered`.
  bool valid(const Graph& g) const;
};

/// Merges two vertex-disjoint cycles through the edges (x, y) and (x⁺, y⁺),
/// where x⁺ and y⁺ follow x and y in the given cycle orders. The edges are
/// not checked here. Throws std::invalid_argument when x or y is not on its cycle.
Cycle patch_cycles(const Cycle& cx, const Cycle& cy, Vertex x, Vertex y);

/// Phase 1 covers all but m vertices by at most L paths grown at their left
/// ends. Phase 2 builds a random graph on the uncovered vertices and keeps its
/// core X. Phase 3 joins the paths pairwise through shortest paths inside X,
/// then closes the last path into a cycle C_Y. Phase 4 runs the sublog
/// strategy on the remaining vertices, seeing only offered pairs inside them,
/// to get a cycle C_X. Phase 5 merges C_X and C_Y.
class SuperlogStrategy final : public Strategy {
 public:
  SuperlogStrategy(SuperlogParams params, std::size_t n, std::size_t k);

  std::string name() const override { return "superlog"; }
  std::vector<std::string> phase_names() const override;
  std::size_t phase() const override;
  void prepare(const Graph& g, Rng& rng) override;
  Choice on_offer(const RoundOffer& offer, const Graph& g, Rng& rng) override;
  void on_applied(std::optional<Edge> added, const Graph& g, Rng& rng) override;
  StrategyStatus status() const override { return status_; }

  const SuperlogPlan& plan() const { return plan_; }
  const PathCover& path_cover() const { return cover_; }
  /// Vertices removed from the expander as interior connectors.
  std::size_t connector_count() const { return used_.size(); }
  std::size_t joins() const { return joins_; }
  /// Largest connector path length (edges) seen so far.
  std::size_t longest_connector() const { return longest_connector_; }
  /// Largest cover size seen after phase 1 started.
  std::size_t max_paths_seen() const { return max_paths_seen_; }
  const VertexSet& expander() const { return expander_; }

 private:
  enum class Stage { Start, Cover, Expander, Join, Close, Inner, Collect, Patch, Done };

  struct Hook {
    std::size_t path;
    Vertex end;
    Vertex anchor;
  };

  void start(const Graph& g, Rng& rng);
  void finish_expander(const Graph& g);
  void refresh_connector_set(const Graph& g);
  void begin_level();
  void join(const Graph& g);
  void close_cycle(const Graph& g);
  void enter_inner(const Graph& g);
  void enter_merge();
  void try_patch(const Graph& g);
  void fail(std::string phase);
  void index_ends();
  std::size_t path_of_end(Vertex v) const { return end_of_[v]; }

  SuperlogParams params_;
  SuperlogPlan plan_;
  std::size_t n_;
  std::size_t k_;
  Stage stage_ = Stage::Start;
  std::uint64_t stage_rounds_ = 0;
  StrategyStatus status_;

  PathCover cover_;
  std::vector<std::size_t> left_of_;  // path index of each left end
  std::vector<std::size_t> end_of_;   // path index of each end (both ends)
  std::size_t max_paths_seen_ = 0;

  VertexSet expander_;   // X
  VertexSet connector_;  // X̃: largest component of the resilient core of X \ I
  std::vector<Vertex> used_;  // I
  std::size_t joins_ = 0;
  std::size_t longest_connector_ = 0;

  // Joining schedule.
  std::size_t level_ = 0;
  std::uint64_t level_attempts_ = 0;
  std::uint64_t level_attempt_cap_ = 0;
  std::uint64_t step_rounds_ = 0;
  std::optional<Hook> first_hook_;
  std::optional<Hook> pending_;
  Cycle cycle_y_;

  // Inner run on the leftover vertices.
  std::vector<Vertex> inner_vertices_;
  std::vector<std::size_t> inner_index_;
  Graph inner_graph_;
  std::unique_ptr<SublogStrategy> inner_;
  std::vector<std::size_t> inner_offer_map_;
  bool inner_offered_ = false;
  Cycle cycle_x_;

  // Merging.
  VertexSet in_x_;
  std::vector<Vertex> next_;
  std::vector<Edge> cut_edges_;  // (x, y) with x in C_X
  std::vector<std::pair<std::uint64_t, std::size_t>> plus_index_;
  std::optional<Edge> last_pick_;
};

// ---------------------------------------------------------------------------
// Intermediate regime

struct DOutParams {
  std::size_t d = 3;
  double epsilon = 0.5;
  /// Restarts of the Hamiltonicity search run by the intermediate strategy.
  std::size_t certify_restarts = 50;
};

/// Greedy construction of a random d-out graph from ordered pairs: only the
/// first coordinate of a pair drives the decision, and every vertex keeps its
/// first d distinct out-neighbors.
class DOutStrategy : public Strategy {
 public:
  DOutStrategy(DOutParams params, std::size_t n, double k);

  std::string name() const override { return "d-out"; }
  std::vector<std::string> phase_names() const override { return {"stage-1", "stage-2"}; }
  std::size_t phase() const override { return stage_ == Stage::Fill ? 1 : 0; }
  void prepare(const Graph& g, Rng& rng) override;
  Choice on_offer(const RoundOffer& offer, const Graph& g, Rng& rng) override;
  void on_applied(std::optional<Edge> added, const Graph& g, Rng& rng) override;
  StrategyStatus status() const override { return status_; }

  const std::vector<std::vector<Vertex>>& out_neighbors() const { return out_; }
  std::uint64_t level_rounds() const { return level_budget_; }
  std::uint64_t fill_rounds() const { return fill_budget_; }

 protected:
  StrategyStatus status_;
  DOutParams params_;

 private:
  enum class Stage { Level, Fill, Done };

  bool pickable(Edge e, std::size_t level) const;

  std::size_t n_;
  std::uint64_t level_budget_;
  std::uint64_t fill_budget_;
  Stage stage_ = Stage::Level;
  std::size_t level_ = 0;
  std::uint64_t stage_rounds_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::size_t> at_level_;
  std::size_t deficient_ = 0;
  std::optional<Edge> last_pick_;
};

/// The 3-out construction followed by a Hamiltonicity search on the result.
class IntermediateStrategy final : public DOutStrategy {
 public:
  IntermediateStrategy(DOutParams params, std::size_t n, double k);

  std::string name() const override { return "intermediate"; }
  void prepare(const Graph& g, Rng& rng) override;

 private:
  bool certified_ = false;
};

// ---------------------------------------------------------------------------
// Baselines and analyzers

/// Always picks candidate 0. With certify_every > 0 it runs the Hamiltonicity
/// search every that many rounds once the minimum degree reaches 2, and
/// succeeds on the first certificate.
class FirstEdgeBaseline final : public Strategy {
 public:
  explicit FirstEdgeBaseline(std::uint64_t certify_every = 0, std::size_t restarts = 10);

  std::string name() const override { return "first-edge"; }
  std::vector<std::string> phase_names() const override { return {"first-edge"}; }
  std::size_t phase() const override { return 0; }
  void prepare(const Graph& g, Rng& rng) override;
  Choice on_offer(const RoundOffer&, const Graph&, Rng&) override { return Choice::pick(0); }
  void on_applied(std::optional<Edge>, const Graph&, Rng&) override { ++rounds_; }
  StrategyStatus status() const override { return status_; }

 private:
  std::uint64_t certify_every_;
  std::size_t restarts_;
  std::uint64_t rounds_ = 0;
  std::uint64_t next_check_ = 0;
  StrategyStatus status_;
};

/// Graph of every insertable pair offered in the first `rounds` ledger entries.
Graph union_graph(std::size_t n, const std::vector<LedgerEntry>& ledger, std::uint64_t rounds);

/// Graph of the pairs actually inserted in the first `rounds` ledger entries.
Graph chosen_graph(std::size_t n, const std::vector<LedgerEntry>& ledger, std::uint64_t rounds);

struct CollectAllOptions {
  /// Rounds between Hamiltonicity checks after the minimum-degree hitting time; 0 means max(1, n/50).
  std::uint64_t check_every = 0;
  std::size_t restarts = 10;
  std::uint64_t seed = 0;
};

struct CollectAllReport {
  std::uint64_t rounds = 0;
  /// Edges of the union after all recorded rounds.
  std::size_t union_edges = 0;
  /// First t such that the union of rounds [0, t) has minimum degree >= 2.
  std::optional<std::uint64_t> min_degree_2_round;
  /// First t (up to the check grid and refinement) at which the search certifies the union.
  std::optional<std::uint64_t> hamiltonian_round;
  Cycle cycle;
};

/// Offline reference that keeps every offered pair.
CollectAllReport collect_all_analyze(std::size_t n, const std::vector<LedgerEntry>& ledger,
                                     const CollectAllOptions& options = {});

/// Vertices of degree < d in the chosen graph after exactly T rounds.
/// Throws std::invalid_argument when the record has no ledger and
/// std::out_of_range when T exceeds the recorded rounds.
std::size_t degree_deficiency_probe(const RunRecord& record, std::size_t d, std::uint64_t t);

}  // namespace achlioptas
