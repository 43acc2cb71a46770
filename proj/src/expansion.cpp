#include "achlioptas/expansion.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "achlioptas/rng.hpp"

namespace achlioptas {

std::string_view to_string(CheckMode mode) {
  return mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
}

bool violates(std::size_t count, std::size_t set_size, Ratio factor, Inequality required) {
  const __uint128_t lhs = static_cast<__uint128_t>(count) * factor.den;
  const __uint128_t rhs = static_cast<__uint128_t>(factor.num) * set_size;
  return required == Inequality::AtLeast ? lhs < rhs : lhs <= rhs;
}

std::uint64_t subset_count(std::size_t pool, std::size_t s_max) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  __uint128_t binom = 1;
  for (std::size_t s = 1; s <= std::min(s_max, pool); ++s) {
    binom = binom * (pool - s + 1) / s;
    if (binom > kMax - total) return kMax;
    total += static_cast<std::uint64_t>(binom);
  }
  return total;
}

void for_each_subset(std::span<const Vertex> pool, std::size_t s_max,
                     const std::function<bool(std::span<const Vertex>)>& visit) {
  const std::size_t n = pool.size();
  std::vector<std::size_t> idx;
  std::vector<Vertex> set;
  for (std::size_t s = 1; s <= std::min(s_max, n); ++s) {
    idx.resize(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    set.resize(s);
    while (true) {
      for (std::size_t i = 0; i < s; ++i) set[i] = pool[idx[i]];
      if (!visit(set)) return;
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

namespace {

// Counts |N(S) ∩ target \ S| with stamp arrays so repeated calls cost O(vol(S)).
class NeighborCounter {
 public:
  explicit NeighborCounter(std::size_t n) : in_set_(n, 0), seen_(n, 0) {}

  std::size_t count(const Graph& g, std::span<const Vertex> s, const VertexSet& target) {
    ++stamp_;
    for (Vertex v : s) in_set_[v] = stamp_;
    std::size_t c = 0;
    for (Vertex v : s) {
      for (Vertex w : g.neighbors(v)) {
        if (in_set_[w] == stamp_ || seen_[w] == stamp_ || !target.contains(w)) continue;
        seen_[w] = stamp_;
        ++c;
      }
    }
    return c;
  }

 private:
  std::vector<std::uint32_t> in_set_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

ExpansionReport run_check(const Graph& g, const std::vector<Vertex>& pool,
                          const VertexSet& target, std::size_t s_max, Ratio factor,
                          const ExpansionOptions& options, Inequality required) {
  if (s_max == 0) throw std::invalid_argument("expansion check: s_max must be >= 1");
  if (factor.den == 0) throw std::invalid_argument("expansion check: zero denominator");
  ExpansionReport report;
  report.mode = options.mode;
  NeighborCounter counter(g.vertex_count());
  auto examine = [&](std::span<const Vertex> s) {
    ++report.sets_checked;
    const std::size_t c = counter.count(g, s, target);
    if (violates(c, s.size(), factor, required)) {
      std::vector<Vertex> sorted(s.begin(), s.end());
      std::sort(sorted.begin(), sorted.end());
      report.violations.push_back({std::move(sorted), c});
    }
  };

  if (options.mode == CheckMode::Exhaustive) {
    const std::uint64_t total = subset_count(pool.size(), s_max);
    if (total > options.subset_budget) {
      throw std::invalid_argument("exhaustive expansion check would enumerate " +
                                  std::to_string(total) + " subsets (budget " +
                                  std::to_string(options.subset_budget) +
                                  "); use sampled mode");
    }
    for_each_subset(pool, s_max, [&](std::span<const Vertex> s) {
      examine(s);
      return true;
    });
    return report;
  }

  if (pool.empty()) return report;
  Rng rng(options.seed, "expansion-sampler");
  std::vector<Vertex> scratch = pool;
  const std::size_t cap = std::min(s_max, pool.size());
  for (std::size_t i = 0; i < options.samples; ++i) {
    const std::size_t size = 1 + rng.uniform(cap);
    for (std::size_t j = 0; j < size; ++j) {
      std::swap(scratch[j], scratch[j + rng.uniform(scratch.size() - j)]);
    }
    examine(std::span<const Vertex>(scratch.data(), size));
  }
  return report;
}

}  // namespace

ExpansionReport check_vertex_expansion(const Graph& g, const VertexSet& within,
                                       std::size_t s_max, Ratio factor,
                                       const ExpansionOptions& options, Inequality required) {
  return run_check(g, within.members(), within, s_max, factor, options, required);
}

ExpansionReport check_bipartite_expansion(const Graph& g, const VertexSet& u_side,
                                          const VertexSet& w_side, std::size_t s_max,
                                          Ratio factor, const ExpansionOptions& options,
                                          Inequality required) {
  for (Vertex v : w_side.members()) {
    if (u_side.contains(v)) throw std::invalid_argument("bipartite expansion: sides overlap");
  }
  return run_check(g, w_side.members(), u_side, s_max, factor, options, required);
}

}  // namespace achlioptas
