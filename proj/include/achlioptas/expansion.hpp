#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "achlioptas/graph.hpp"

namespace achlioptas {

/// Non-negative rational expansion factor num/den.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// The relation a set must satisfy to count as expanding: count >= f|S| or count > f|S|.
enum class Inequality { AtLeast, StrictlyMore };

enum class CheckMode { Exhaustive, Sampled };

std::string_view to_string(CheckMode mode);

struct ExpansionOptions {
  CheckMode mode = CheckMode::Exhaustive;
  /// Number of random sets drawn in sampled mode.
  std::size_t samples = 10'000;
  /// Exhaustive mode refuses to enumerate more subsets than this.
  std::uint64_t subset_budget = 1'000'000;
  std::uint64_t seed = 0;
};

struct ExpansionViolation {
  std::vector<Vertex> set;
  std::size_t neighbor_count = 0;
};

struct ExpansionReport {
  CheckMode mode = CheckMode::Exhaustive;
  std::vector<ExpansionViolation> violations;
  std::uint64_t sets_checked = 0;

  bool ok() const { return violations.empty(); }
};

/// True iff `count` fails the required relation against factor * set_size.
bool violates(std::size_t count, std::size_t set_size, Ratio factor, Inequality required);

/// Sum of C(pool, s) for s = 1..s_max, saturating at UINT64_MAX.
std::uint64_t subset_count(std::size_t pool, std::size_t s_max);

/// Calls `visit` on every nonempty subset of `pool` with at most s_max
/// elements, smallest sets first and lexicographic within a size. Stops early
/// when visit returns false.
void for_each_subset(std::span<const Vertex> pool, std::size_t s_max,
                     const std::function<bool(std::span<const Vertex>)>& visit);

/// Flags every nonempty S ⊆ within with |S| <= s_max whose neighborhood
/// N(S) ∩ (within \ S) does not satisfy `required` against factor·|S|.
/// Throws std::invalid_argument when exhaustive mode would exceed the subset budget.
ExpansionReport check_vertex_expansion(const Graph& g, const VertexSet& within,
                                       std::size_t s_max, Ratio factor,
                                       const ExpansionOptions& options = {},
                                       Inequality required = Inequality::AtLeast);

/// Flags S ⊆ w_side, |S| <= s_max, with |N(S) ∩ u_side| <= factor·|S|
/// (the default relation demands strictly more neighbors).
ExpansionReport check_bipartite_expansion(const Graph& g, const VertexSet& u_side,
                                          const VertexSet& w_side, std::size_t s_max,
                                          Ratio factor, const ExpansionOptions& options = {},
                                          Inequality required = Inequality::StrictlyMore);

}  // namespace achlioptas
