#pragma once

// Pósa rotation-extension machinery.
//
// A path is a vertex sequence x0 x1 ... xh. An elementary rotation at a chord
// (xh, xi), i < h-1, replaces the edge (xi, xi+1) by the chord; the result is a
// path of the same length that still starts at x0 and now ends at xi+1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "achlioptas/graph.hpp"
#include "achlioptas/rng.hpp"

namespace achlioptas {

using Path = std::vector<Vertex>;
/// Vertex order of a cycle; the last vertex is adjacent to the first.
using Cycle = std::vector<Vertex>;

/// Distinct vertices, consecutive ones adjacent in g.
bool is_valid_path(const Graph& g, std::span<const Vertex> path);

/// Every vertex of g exactly once, consecutive and wraparound pairs are edges.
bool verify_hamilton_cycle(const Graph& g, std::span<const Vertex> cycle);
/// Same check for a simple cycle on a subset of the vertices (length >= 3).
bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle);

struct ClosureOptions {
  /// Stop as soon as some reachable endpoint has a neighbor off the path.
  bool stop_at_extension = false;
  /// Stop after this many endpoints have been discovered (0 = no limit).
  std::size_t max_endpoints = 0;
  /// Paths with at most this many vertices are closed by an exact search over
  /// whole path states instead of the endpoint-keyed search.
  std::size_t exact_max_vertices = 16;
  /// State budget of the exact search; beyond it the endpoint-keyed search is used.
  std::size_t exact_state_limit = 1 << 16;
};

/// Endpoints reachable from a base path by rotations with the first vertex
/// fixed.
///
/// Short paths are searched exactly, over every distinct path state. Longer
/// paths use an endpoint-keyed search: each endpoint is expanded once, from the
/// first path discovered for it, and a predecessor record per endpoint rebuilds
/// that path on demand. The endpoint-keyed set can miss endpoints that only a
/// different path to an already known endpoint would reveal.
class RotationClosure {
 public:
  const Path& base() const { return base_; }
  Vertex fixed_end() const { return base_.front(); }
  /// Reachable endpoints in discovery order; the base path's last vertex comes first.
  const std::vector<Vertex>& endpoints() const { return endpoints_; }
  bool contains(Vertex y) const { return y < reached_.size() && reached_[y] != 0; }

  /// A path of the closure that starts at fixed_end() and ends at y.
  /// Throws std::out_of_range when y is not a reachable endpoint.
  Path path_to(Vertex y) const;

  /// Set when the search met an endpoint with an off-path neighbor.
  struct Extension {
    Vertex endpoint;
    Vertex outside;
  };
  const std::optional<Extension>& extension() const { return extension_; }

  /// True when every rotation sequence was explored.
  bool exact() const { return !exact_paths_.empty(); }

 private:
  friend RotationClosure rotation_closure(const Graph&, const Path&, const ClosureOptions&);

  struct Step {
    Vertex parent;  // endpoint whose path was rotated
    Vertex pivot;   // chord (parent, pivot) was used
  };

  Path base_;
  std::vector<Vertex> endpoints_;
  std::vector<Step> steps_;
  std::vector<std::uint8_t> reached_;
  std::optional<Extension> extension_;
  // Exact mode only: one witness path per endpoint, parallel to endpoints_.
  std::vector<Path> exact_paths_;
};

/// Throws std::invalid_argument when p is not a valid nonempty path of g.
RotationClosure rotation_closure(const Graph& g, const Path& p, const ClosureOptions& options = {});

/// (N(R) \ R) ⊆ R⁻ ∪ R⁺ where R⁻/R⁺ are the predecessors/successors of R
/// along the base path.
bool posa_containment_check(const Graph& g, const RotationClosure& closure);
bool posa_containment_check(const Graph& g, std::span<const Vertex> base,
                            std::span<const Vertex> endpoints);

/// Non-edges whose insertion closes a cycle through all vertices of the path.
class BoosterSet {
 public:
  const std::vector<Edge>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(Edge e) const { return anchor_.count(edge_key(e)) != 0; }
  /// The endpoint held fixed while the pair was found.
  std::optional<Vertex> anchor(Edge e) const;

 private:
  friend BoosterSet booster_pairs(const Graph&, const Path&, std::size_t);
  std::vector<Edge> pairs_;
  std::unordered_map<std::uint64_t, Vertex> anchor_;
};

/// Pairs (x0, v) for v in the closure R of p, plus (y, z) for the first
/// r_cap endpoints y of R and every z reachable by rotating the path ending at
/// y with y held fixed. Only non-edges are returned.
BoosterSet booster_pairs(const Graph& g, const Path& p, std::size_t r_cap);

/// A path of g with the two vertices of `pair` as endpoints and the vertex set
/// of p, rebuilt from the rotation sequence that discovered the pair.
std::optional<Path> booster_witness(const Graph& g, const Path& p, const BoosterSet& boosters,
                                    Edge pair);

struct PosaOptions {
  /// Endpoints of R whose own closures are searched for cycles and extensions.
  std::size_t double_rotation_cap = 8;
};

struct PosaResult {
  Path path;
  std::optional<Cycle> hamilton_cycle;
  /// A cycle through the whole path exists but no vertex of it has an outside
  /// neighbor, so the path's component is spanned and it cannot grow.
  bool component_spanned = false;
};

/// Grows p by extensions and rotations, closing and re-opening cycles through
/// an outside neighbor, until a Hamilton cycle appears or no further progress
/// is possible. Throws std::invalid_argument when p is not a valid path.
PosaResult extend_or_close(const Graph& g, Path p, const PosaOptions& options = {});

/// Random greedy path from `start` that always steps to an unvisited neighbor
/// with the fewest unvisited neighbors of its own (ties broken by rng).
Path greedy_path(const Graph& g, Vertex start, Rng& rng);

/// Rotation-extension from random greedy paths. A returned cycle is always a
/// verified Hamilton cycle; nullopt only means none was found.
std::optional<Cycle> hamiltonicity_search(const Graph& g, std::size_t restarts,
                                          std::uint64_t seed);

/// Exact backtracking search. Throws std::invalid_argument for n above `cap`.
std::optional<Cycle> brute_force_hamiltonian(const Graph& g, std::size_t cap = 14);

}  // namespace achlioptas
