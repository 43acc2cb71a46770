#include "achlioptas/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace achlioptas {

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members) : member_(n, 0) {
  for (Vertex v : members) {
    if (v >= n) throw std::out_of_range("VertexSet: member out of range");
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  std::fill(s.member_.begin(), s.member_.end(), 1);
  s.count_ = n;
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (v >= member_.size()) throw std::out_of_range("VertexSet: vertex out of range");
  if (member_[v]) return false;
  member_[v] = 1;
  ++count_;
  return true;
}

bool VertexSet::erase(Vertex v) {
  if (v >= member_.size() || !member_[v]) return false;
  member_[v] = 0;
  --count_;
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t v = 0; v < member_.size(); ++v) {
    if (member_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet c(member_.size());
  for (std::size_t v = 0; v < member_.size(); ++v) {
    if (!member_[v]) c.insert(static_cast<Vertex>(v));
  }
  return c;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= adj_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(adj_.size()));
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
  return true;
}

std::size_t Graph::min_degree() const {
  std::size_t best = adj_.empty() ? 0 : adj_[0].size();
  for (const auto& a : adj_) best = std::min(best, a.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({static_cast<Vertex>(u), v});
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> local(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    local[keep[i]] = static_cast<std::int64_t>(i);
  }
  Graph sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : adj_[keep[i]]) {
      const auto j = local[w];
      if (j > static_cast<std::int64_t>(i)) {
        sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return sub;
}

std::uint64_t Graph::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(adj_.size());
  for (const Edge& e : edges()) mix(edge_key(e));
  return h;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw std::runtime_error("edge list: missing header");
  std::size_t n = 0, m = 0;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m)) throw std::runtime_error("edge list: malformed header '" + line + "'");
  }
  Graph g(n);
  std::size_t read = 0;
  while (next_line()) {
    std::istringstream ls(line);
    long long u = -1, v = -1;
    if (!(ls >> u >> v) || u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw std::runtime_error("edge list: malformed edge line '" + line + "'");
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++read;
  }
  if (read != m) {
    throw std::runtime_error("edge list: header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(read));
  }
  return g;
}

}  // namespace achlioptas
