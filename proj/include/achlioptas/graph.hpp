#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace achlioptas {

using Vertex = std::uint32_t;

/// Undirected edge. Stored normalized (u < v) wherever it is used as a key.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Key of a normalized edge, usable in hash sets.
inline std::uint64_t edge_key(Edge e) {
  const Edge n = e.normalized();
  return (std::uint64_t{n.u} << 32) | n.v;
}

/// Membership bitmap over [0, n) with a maintained cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : member_(n, 0) {}
  VertexSet(std::size_t n, std::span<const Vertex> members);

  static VertexSet full(std::size_t n);

  std::size_t universe() const { return member_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const { return v < member_.size() && member_[v] != 0; }
  /// Returns true iff v was not yet a member.
  bool insert(Vertex v);
  /// Returns true iff v was a member.
  bool erase(Vertex v);

  /// Members in increasing order.
  std::vector<Vertex> members() const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.member_ == b.member_;
  }

 private:
  std::vector<std::uint8_t> member_;
  std::size_t count_ = 0;
};

/// Simple undirected graph on a fixed vertex set [0, n).
///
/// Neighbor lists are kept sorted so that membership tests are logarithmic and
/// iteration order is deterministic. Self-loops and parallel edges are never
/// stored.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  /// Inserts {u, v}. Returns false for self-loops and already present edges.
  /// Throws std::out_of_range when an endpoint is not below n.
  bool add_edge(Vertex u, Vertex v);
  bool add_edge(Edge e) { return add_edge(e.u, e.v); }

  /// True iff the pair could be inserted as a new edge.
  bool is_addable(Edge e) const {
    return e.u != e.v && e.u < adj_.size() && e.v < adj_.size() && !has_edge(e);
  }

  std::size_t min_degree() const;

  /// All edges, normalized and sorted.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep`, relabelled to [0, keep.size()) in the given order.
  Graph induced(std::span<const Vertex> keep) const;

  /// Order-sensitive 64-bit digest of the edge set (FNV-1a over sorted edges).
  std::uint64_t fingerprint() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Plain-text edge list: header "n m", then one "u v" pair per line.
void write_edge_list(std::ostream& out, const Graph& g);
/// Throws std::runtime_error on malformed input.
Graph read_edge_list(std::istream& in);

}  // namespace achlioptas
