#include "achlioptas/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace achlioptas {

VertexSet peel_core(const Graph& g, std::size_t min_degree) {
  return peel_core(g, min_degree, VertexSet::full(g.vertex_count()));
}

VertexSet peel_core(const Graph& g, std::size_t min_degree, const VertexSet& within) {
  const std::size_t n = g.vertex_count();
  if (within.universe() != n) throw std::invalid_argument("peel_core: set universe mismatch");
  VertexSet core = within;
  std::vector<std::size_t> deg(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (!core.contains(v)) continue;
    for (Vertex w : g.neighbors(v)) deg[v] += core.contains(w) ? 1 : 0;
    if (deg[v] < min_degree) queue.push_back(v);
  }
  std::vector<std::uint8_t> queued(n, 0);
  for (Vertex v : queue) queued[v] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    core.erase(v);
    for (Vertex w : g.neighbors(v)) {
      if (!core.contains(w) || queued[w]) continue;
      if (--deg[w] < min_degree) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return core;
}

std::size_t edge_boundary(const Graph& g, const VertexSet& s) {
  std::size_t count = 0;
  for (Vertex v : s.members()) {
    for (Vertex w : g.neighbors(v)) count += s.contains(w) ? 0 : 1;
  }
  return count;
}

std::size_t neighbors_in(const Graph& g, std::span<const Vertex> s, const VertexSet& target) {
  std::vector<Vertex> seen;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (target.contains(w)) seen.push_back(w);
    }
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::size_t count = seen.size();
  for (Vertex v : s) {
    if (std::binary_search(seen.begin(), seen.end(), v)) --count;
  }
  return count;
}

std::vector<long> bfs_distances(const Graph& g, Vertex source, const VertexSet& within) {
  std::vector<long> dist(g.vertex_count(), -1);
  if (!within.contains(source)) return dist;
  std::deque<Vertex> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0 && within.contains(w)) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

bool connected_within(const Graph& g, const VertexSet& within) {
  if (within.empty()) return true;
  const auto members = within.members();
  const auto dist = bfs_distances(g, members.front(), within);
  return std::all_of(members.begin(), members.end(), [&](Vertex v) { return dist[v] >= 0; });
}

bool connected(const Graph& g) { return connected_within(g, VertexSet::full(g.vertex_count())); }

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v,
                                                 const VertexSet& restrict_to) {
  if (!restrict_to.contains(u) || !restrict_to.contains(v)) return std::nullopt;
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n);
  std::vector<std::uint8_t> seen(n, 0);
  std::deque<Vertex> q{u};
  seen[u] = 1;
  parent[u] = u;
  while (!q.empty() && !seen[v]) {
    const Vertex x = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(x)) {
      if (!seen[w] && restrict_to.contains(w)) {
        seen[w] = 1;
        parent[w] = x;
        q.push_back(w);
      }
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::size_t> diameter_within(const Graph& g, const VertexSet& s) {
  const auto members = s.members();
  std::size_t best = 0;
  for (Vertex src : members) {
    const auto dist = bfs_distances(g, src, s);
    for (Vertex w : members) {
      if (dist[w] < 0) return std::nullopt;
      best = std::max(best, static_cast<std::size_t>(dist[w]));
    }
  }
  return best;
}

}  // namespace achlioptas
