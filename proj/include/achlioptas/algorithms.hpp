#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "achlioptas/graph.hpp"

namespace achlioptas {

/// Maximal vertex set in which every member has at least `min_degree`
/// neighbors inside the set (the D-core). Computed by repeated deletion of
/// low-degree vertices; the result does not depend on the deletion order.
VertexSet peel_core(const Graph& g, std::size_t min_degree);

/// D-core of the subgraph induced by `within`.
VertexSet peel_core(const Graph& g, std::size_t min_degree, const VertexSet& within);

/// Number of edges with exactly one endpoint in `s`.
std::size_t edge_boundary(const Graph& g, const VertexSet& s);

/// |N(S) ∩ target| where N(S) is the open neighborhood of S (members of S
/// that also lie in target are not counted).
std::size_t neighbors_in(const Graph& g, std::span<const Vertex> s, const VertexSet& target);

bool connected(const Graph& g);
/// Connectivity of the subgraph induced by `within`; the empty set counts as connected.
bool connected_within(const Graph& g, const VertexSet& within);

/// BFS distances from `source` inside `within`; unreachable vertices get -1.
std::vector<long> bfs_distances(const Graph& g, Vertex source, const VertexSet& within);

/// Shortest u-v path using only vertices of `restrict_to` (both endpoints
/// included). Returns the vertex sequence u..v, or nullopt when none exists.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v,
                                                 const VertexSet& restrict_to);

/// Largest pairwise distance inside the subgraph induced by `s`; nullopt when
/// that subgraph is disconnected. The empty set and singletons have diameter 0.
std::optional<std::size_t> diameter_within(const Graph& g, const VertexSet& s);

}  // namespace achlioptas
