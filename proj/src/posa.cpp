#include "achlioptas/posa.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <limits>
#include <stdexcept>
#include <string>

#include "achlioptas/algorithms.hpp"
#include "achlioptas/rng.hpp"

namespace achlioptas {

namespace {

constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// Reverses path[from..] and keeps the position index in sync.
void reverse_tail(Path& path, std::vector<std::size_t>& pos, std::size_t from) {
  std::reverse(path.begin() + static_cast<std::ptrdiff_t>(from), path.end());
  for (std::size_t k = from; k < path.size(); ++k) pos[path[k]] = k;
}

std::vector<std::size_t> positions(const Path& path, std::size_t n) {
  std::vector<std::size_t> pos(n, kNoIndex);
  for (std::size_t k = 0; k < path.size(); ++k) pos[path[k]] = k;
  return pos;
}

}  // namespace

bool is_valid_path(const Graph& g, std::span<const Vertex> path) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Vertex v = path[k];
    if (v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
    if (k > 0 && !g.has_edge(path[k - 1], v)) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return cycle.size() >= 3 && is_valid_path(g, cycle) && g.has_edge(cycle.front(), cycle.back());
}

bool verify_hamilton_cycle(const Graph& g, std::span<const Vertex> cycle) {
  return cycle.size() == g.vertex_count() && is_valid_cycle(g, cycle);
}

Path RotationClosure::path_to(Vertex y) const {
  if (!contains(y)) {
    throw std::out_of_range("rotation closure: vertex " + std::to_string(y) + " not reachable");
  }
  if (exact()) {
    const auto it = std::find(endpoints_.begin(), endpoints_.end(), y);
    return exact_paths_[static_cast<std::size_t>(it - endpoints_.begin())];
  }
  std::vector<Step> chain;
  for (Vertex v = y; v != base_.back(); v = steps_[v].parent) chain.push_back(steps_[v]);
  Path path = base_;
  auto pos = positions(path, reached_.size());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    reverse_tail(path, pos, pos[it->pivot] + 1);
  }
  return path;
}

namespace {

// Breadth-first search over whole path states. Returns false when the state
// budget runs out; the outputs are then incomplete.
bool exact_closure(const Graph& g, const Path& p, const ClosureOptions& options,
                   std::optional<RotationClosure::Extension>& extension,
                   std::vector<Vertex>& endpoints,
                   std::vector<Path>& witnesses, std::vector<std::uint8_t>& reached) {
  const std::size_t n = g.vertex_count();
  const std::size_t h = p.size() - 1;
  std::vector<std::uint8_t> on_path(n, 0);
  for (Vertex v : p) on_path[v] = 1;
  std::set<Path> seen{p};
  std::deque<Path> frontier{p};
  reached[p.back()] = 1;
  endpoints.push_back(p.back());
  witnesses.push_back(p);
  std::vector<std::size_t> pos(n, kNoIndex);
  while (!frontier.empty()) {
    const Path q = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t k = 0; k < q.size(); ++k) pos[q[k]] = k;
    const Vertex x = q.back();
    for (Vertex w : g.neighbors(x)) {
      if (!on_path[w]) {
        if (!extension) extension = RotationClosure::Extension{x, w};
        if (options.stop_at_extension) return true;
        continue;
      }
      const std::size_t i = pos[w];
      if (i + 1 >= h) continue;
      Path next = q;
      std::reverse(next.begin() + static_cast<std::ptrdiff_t>(i) + 1, next.end());
      if (!seen.insert(next).second) continue;
      if (seen.size() > options.exact_state_limit) return false;
      const Vertex y = next.back();
      if (!reached[y]) {
        reached[y] = 1;
        endpoints.push_back(y);
        witnesses.push_back(next);
        if (options.max_endpoints != 0 && endpoints.size() >= options.max_endpoints) return true;
      }
      frontier.push_back(std::move(next));
    }
  }
  return true;
}

}  // namespace

RotationClosure rotation_closure(const Graph& g, const Path& p, const ClosureOptions& options) {
  if (p.empty() || !is_valid_path(g, p)) {
    throw std::invalid_argument("rotation_closure: not a valid path of the graph");
  }
  const std::size_t n = g.vertex_count();
  if (p.size() <= options.exact_max_vertices) {
    RotationClosure c;
    c.base_ = p;
    c.reached_.assign(n, 0);
    if (exact_closure(g, p, options, c.extension_, c.endpoints_, c.exact_paths_, c.reached_)) {
      return c;
    }
  }
  RotationClosure c;
  c.base_ = p;
  c.steps_.assign(n, {0, 0});
  c.reached_.assign(n, 0);

  Path path = p;
  auto pos = positions(path, n);
  const std::size_t h = path.size() - 1;
  const Vertex root = path.back();
  c.reached_[root] = 1;
  c.endpoints_.push_back(root);

  // Depth-first over endpoints; the working path is rotated on the way down
  // and restored on the way up, so memory stays O(n).
  struct Frame {
    std::size_t next;
    std::size_t undo_from;
  };
  std::vector<Frame> stack{{0, kNoIndex}};
  while (!stack.empty()) {
    const Vertex x = path.back();
    const auto nb = g.neighbors(x);
    bool descended = false;
    while (stack.back().next < nb.size()) {
      const Vertex w = nb[stack.back().next++];
      const std::size_t i = pos[w];
      if (i == kNoIndex) {
        if (!c.extension_) c.extension_ = RotationClosure::Extension{x, w};
        if (options.stop_at_extension) return c;
        continue;
      }
      if (i + 1 >= h) continue;  // w is x's predecessor
      const Vertex y = path[i + 1];
      if (c.reached_[y]) continue;
      c.reached_[y] = 1;
      c.steps_[y] = {x, w};
      c.endpoints_.push_back(y);
      if (options.max_endpoints != 0 && c.endpoints_.size() >= options.max_endpoints) return c;
      reverse_tail(path, pos, i + 1);
      stack.push_back({0, i + 1});
      descended = true;
      break;
    }
    if (!descended) {
      const std::size_t undo = stack.back().undo_from;
      stack.pop_back();
      if (undo != kNoIndex) reverse_tail(path, pos, undo);
    }
  }
  return c;
}

bool posa_containment_check(const Graph& g, const RotationClosure& closure) {
  return posa_containment_check(g, closure.base(), closure.endpoints());
}

bool posa_containment_check(const Graph& g, std::span<const Vertex> base,
                            std::span<const Vertex> endpoints) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> pos(n, kNoIndex);
  for (std::size_t k = 0; k < base.size(); ++k) pos[base[k]] = k;
  std::vector<std::uint8_t> in_r(n, 0), allowed(n, 0);
  for (Vertex y : endpoints) in_r[y] = 1;
  for (Vertex y : endpoints) {
    const std::size_t k = pos[y];
    if (k == kNoIndex) return false;
    if (k > 0) allowed[base[k - 1]] = 1;
    if (k + 1 < base.size()) allowed[base[k + 1]] = 1;
  }
  for (Vertex y : endpoints) {
    for (Vertex w : g.neighbors(y)) {
      if (!in_r[w] && !allowed[w]) return false;
    }
  }
  return true;
}

std::optional<Vertex> BoosterSet::anchor(Edge e) const {
  const auto it = anchor_.find(edge_key(e));
  if (it == anchor_.end()) return std::nullopt;
  return it->second;
}

BoosterSet booster_pairs(const Graph& g, const Path& p, std::size_t r_cap) {
  BoosterSet set;
  const auto add = [&](Vertex a, Vertex b, Vertex anchor) {
    if (a == b || g.has_edge(a, b)) return;
    if (set.anchor_.emplace(edge_key({a, b}), anchor).second) {
      set.pairs_.push_back(Edge{a, b}.normalized());
    }
  };
  const RotationClosure closure = rotation_closure(g, p);
  const Vertex x0 = p.front();
  for (Vertex v : closure.endpoints()) add(x0, v, x0);
  const std::size_t cap = std::min(r_cap, closure.endpoints().size());
  for (std::size_t k = 0; k < cap; ++k) {
    const Vertex y = closure.endpoints()[k];
    Path from_y = closure.path_to(y);
    std::reverse(from_y.begin(), from_y.end());
    const RotationClosure second = rotation_closure(g, from_y);
    for (Vertex z : second.endpoints()) add(y, z, y);
  }
  std::sort(set.pairs_.begin(), set.pairs_.end());
  return set;
}

std::optional<Path> booster_witness(const Graph& g, const Path& p, const BoosterSet& boosters,
                                    Edge pair) {
  const auto anchor = boosters.anchor(pair);
  if (!anchor || p.empty() || !is_valid_path(g, p)) return std::nullopt;
  const Vertex other = pair.u == *anchor ? pair.v : pair.u;
  const RotationClosure closure = rotation_closure(g, p);
  if (*anchor == p.front()) {
    if (!closure.contains(other)) return std::nullopt;
    return closure.path_to(other);
  }
  if (!closure.contains(*anchor)) return std::nullopt;
  Path from_anchor = closure.path_to(*anchor);
  std::reverse(from_anchor.begin(), from_anchor.end());
  const RotationClosure second = rotation_closure(g, from_anchor);
  if (!second.contains(other)) return std::nullopt;
  return second.path_to(other);
}

namespace {

// Extends greedily at both ends while an end has an off-path neighbor.
void extend_greedily(const Graph& g, Path& path, std::vector<std::uint8_t>& on_path) {
  bool grown = true;
  while (grown) {
    grown = false;
    for (int side = 0; side < 2; ++side) {
      bool again = true;
      while (again) {
        again = false;
        for (Vertex w : g.neighbors(path.back())) {
          if (!on_path[w]) {
            on_path[w] = 1;
            path.push_back(w);
            again = grown = true;
            break;
          }
        }
      }
      std::reverse(path.begin(), path.end());
    }
  }
}

// Opens a cycle into a longer path through a vertex outside it.
std::optional<Path> open_cycle(const Graph& g, const Cycle& cycle,
                               const std::vector<std::uint8_t>& on_cycle) {
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    for (Vertex w : g.neighbors(cycle[k])) {
      if (on_cycle[w]) continue;
      Path longer;
      longer.reserve(cycle.size() + 1);
      longer.push_back(w);
      for (std::size_t j = 0; j < cycle.size(); ++j) longer.push_back(cycle[(k + j) % cycle.size()]);
      return longer;
    }
  }
  return std::nullopt;
}

// A cycle through all of the closure's base path, if one of the reachable
// endpoints is adjacent to the fixed end.
std::optional<Cycle> closing_cycle(const Graph& g, const RotationClosure& c) {
  if (c.base().size() < 3) return std::nullopt;
  const Vertex x0 = c.fixed_end();
  for (Vertex y : c.endpoints()) {
    if (g.has_edge(x0, y)) {
      return c.path_to(y);
    }
  }
  return std::nullopt;
}

}  // namespace

PosaResult extend_or_close(const Graph& g, Path p, const PosaOptions& options) {
  if (p.empty() || !is_valid_path(g, p)) {
    throw std::invalid_argument("extend_or_close: not a valid path of the graph");
  }
  const std::size_t n = g.vertex_count();
  PosaResult result;
  std::vector<std::uint8_t> on_path(n, 0);
  const ClosureOptions until_extension{.stop_at_extension = true};

  while (true) {
    std::fill(on_path.begin(), on_path.end(), 0);
    for (Vertex v : p) on_path[v] = 1;
    extend_greedily(g, p, on_path);

    if (p.size() == n && n >= 3 && g.has_edge(p.front(), p.back())) {
      result.path = p;
      result.hamilton_cycle = p;
      return result;
    }

    std::optional<Cycle> cycle;
    bool extended = false;
    auto try_closure = [&](const Path& base) {
      const RotationClosure c = rotation_closure(g, base, until_extension);
      if (const auto& ext = c.extension()) {
        p = c.path_to(ext->endpoint);
        p.push_back(ext->outside);
        extended = true;
        return;
      }
      if (!cycle) cycle = closing_cycle(g, c);
    };

    try_closure(p);
    if (!extended && !cycle) {
      Path reversed(p.rbegin(), p.rend());
      try_closure(reversed);
    }
    if (!extended && !cycle && options.double_rotation_cap > 0) {
      const RotationClosure first = rotation_closure(g, p);
      const std::size_t cap = std::min(options.double_rotation_cap, first.endpoints().size());
      for (std::size_t k = 0; k < cap && !extended && !cycle; ++k) {
        Path from_y = first.path_to(first.endpoints()[k]);
        std::reverse(from_y.begin(), from_y.end());
        try_closure(from_y);
      }
    }
    if (extended) continue;
    if (!cycle) {
      result.path = p;
      return result;
    }
    if (cycle->size() == n) {
      result.path = *cycle;
      result.hamilton_cycle = std::move(*cycle);
      return result;
    }
    std::fill(on_path.begin(), on_path.end(), 0);
    for (Vertex v : *cycle) on_path[v] = 1;
    auto longer = open_cycle(g, *cycle, on_path);
    if (!longer) {
      result.path = p;
      result.component_spanned = true;
      return result;
    }
    p = std::move(*longer);
  }
}

Path greedy_path(const Graph& g, Vertex start, Rng& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> visited(n, 0);
  std::vector<std::size_t> free_degree(n);
  for (Vertex v = 0; v < n; ++v) free_degree[v] = g.degree(v);
  Path path;
  auto visit = [&](Vertex v) {
    visited[v] = 1;
    path.push_back(v);
    for (Vertex w : g.neighbors(v)) --free_degree[w];
  };
  visit(start);
  std::vector<Vertex> best;
  while (true) {
    best.clear();
    std::size_t best_degree = std::numeric_limits<std::size_t>::max();
    for (Vertex w : g.neighbors(path.back())) {
      if (visited[w]) continue;
      if (free_degree[w] < best_degree) {
        best_degree = free_degree[w];
        best.clear();
      }
      if (free_degree[w] == best_degree) best.push_back(w);
    }
    if (best.empty()) break;
    visit(rng.pick(best));
  }
  return path;
}

std::optional<Cycle> hamiltonicity_search(const Graph& g, std::size_t restarts,
                                          std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || g.min_degree() < 2 || !connected(g)) return std::nullopt;
  Rng rng(seed, "hamiltonicity-search");
  for (std::size_t r = 0; r < std::max<std::size_t>(restarts, 1); ++r) {
    const Path start = greedy_path(g, static_cast<Vertex>(rng.uniform(n)), rng);
    PosaOptions options;
    options.double_rotation_cap = 8 + 8 * r;
    const PosaResult result = extend_or_close(g, start, options);
    if (result.hamilton_cycle && verify_hamilton_cycle(g, *result.hamilton_cycle)) {
      return result.hamilton_cycle;
    }
  }
  return std::nullopt;
}

std::optional<Cycle> brute_force_hamiltonian(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n > cap || n > 25) {
    throw std::invalid_argument("brute_force_hamiltonian: n=" + std::to_string(n) +
                                " exceeds cap " + std::to_string(std::min<std::size_t>(cap, 25)));
  }
  if (n < 3 || g.min_degree() < 2) return std::nullopt;
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;

  // ends[mask]: vertices v such that some path from vertex 0 visits exactly mask and ends at v.
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1u) || !ends[mask]) continue;
    for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
      const auto v = static_cast<std::uint32_t>(__builtin_ctz(e));
      for (std::uint32_t nb = adj[v] & ~mask; nb; nb &= nb - 1) {
        const auto w = static_cast<std::uint32_t>(__builtin_ctz(nb));
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  const std::uint32_t closing = ends[full] & adj[0];
  if (!closing) return std::nullopt;
  Cycle cycle;
  std::uint32_t mask = full;
  auto v = static_cast<std::uint32_t>(__builtin_ctz(closing));
  while (true) {
    cycle.push_back(v);
    if (v == 0) break;
    const std::uint32_t prev_mask = mask & ~(1u << v);
    const std::uint32_t candidates = ends[prev_mask] & adj[v];
    v = static_cast<std::uint32_t>(__builtin_ctz(candidates));
    mask = prev_mask;
  }
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace achlioptas
