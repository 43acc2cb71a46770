#include <gtest/gtest.h>

#include <sstream>

#include "achlioptas/algorithms.hpp"
#include "achlioptas/expansion.hpp"
#include "achlioptas/graph.hpp"
#include "oracles.hpp"

using namespace achlioptas;

namespace {

std::vector<bool> as_mask(const VertexSet& s) {
  std::vector<bool> m(s.universe(), false);
  for (Vertex v : s.members()) m[v] = true;
  return m;
}

Graph two_triangles() {
  Graph g(6);
  for (Vertex base : {0u, 3u}) {
    g.add_edge(base, base + 1);
    g.add_edge(base + 1, base + 2);
    g.add_edge(base, base + 2);
  }
  return g;
}

}  // namespace

TEST(Graph, AddEdgeReportsInsertions) {
  Graph g(5);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_FALSE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_FALSE(g.add_edge(3, 3));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, OutOfRangeVertexThrows) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
}

TEST(Graph, AdjacencySymmetricAndHandshake) {
  Rng rng(11, "graph-test");
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::gnp(30, 0.2, rng);
    std::size_t sum = 0;
    for (Vertex u = 0; u < 30; ++u) {
      sum += g.degree(u);
      for (Vertex w : g.neighbors(u)) EXPECT_TRUE(g.has_edge(w, u));
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(Graph, EdgeListRoundTrip) {
  Rng rng(3);
  const Graph g = oracle::gnm(25, 60, rng);
  std::stringstream s;
  write_edge_list(s, g);
  const Graph back = read_edge_list(s);
  EXPECT_EQ(back.vertex_count(), 25u);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.fingerprint(), g.fingerprint());
}

TEST(Graph, EdgeListRejectsGarbage) {
  std::stringstream s("3 1\n0 7\n");
  EXPECT_THROW(read_edge_list(s), std::runtime_error);
}

TEST(Core, CompleteGraphKeepsAll) {
  EXPECT_EQ(peel_core(complete_graph(5), 4).size(), 5u);
}

TEST(Core, PathPeelsAway) { EXPECT_TRUE(peel_core(path_graph(6), 2).empty()); }

TEST(Core, MatchesSweepOracleUnderRandomOrders) {
  Rng rng(2024, "core-order");
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::gnp(14, 0.35, rng);
    const auto lib = as_mask(peel_core(g, 3));
    std::vector<Vertex> order(14);
    for (Vertex v = 0; v < 14; ++v) order[v] = v;
    for (int o = 0; o < 10; ++o) {
      rng.shuffle(order);
      EXPECT_EQ(oracle::core_by_sweeps(g, 3, order), lib);
    }
  }
}

TEST(Core, Idempotent) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::gnp(40, 0.15, rng);
    const VertexSet c = peel_core(g, 3);
    EXPECT_EQ(peel_core(g, 3, c), c);
  }
}

TEST(Boundary, SmallCases) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(edge_boundary(k4, VertexSet(4, std::vector<Vertex>{0, 1})), 4u);
  EXPECT_EQ(edge_boundary(k4, VertexSet(4)), 0u);
}

TEST(Boundary, MatchesEdgeScan) {
  Rng rng(5);
  const Graph g = oracle::gnm(12, 40, rng);
  for (int t = 0; t < 100; ++t) {
    VertexSet s(12);
    for (Vertex v = 0; v < 12; ++v)
      if (rng.bernoulli(0.5)) s.insert(v);
    EXPECT_EQ(edge_boundary(g, s), oracle::boundary_by_edge_scan(g, as_mask(s)));
  }
}

TEST(Connectivity, PathAndTriangles) {
  EXPECT_EQ(diameter_within(path_graph(5), VertexSet::full(5)), 4u);
  const Graph t = two_triangles();
  EXPECT_FALSE(connected(t));
  EXPECT_FALSE(diameter_within(t, VertexSet::full(6)).has_value());
}

TEST(Connectivity, DiameterMatchesFloyd) {
  Rng rng(77);
  for (int t = 0; t < 5; ++t) {
    const Graph g = oracle::gnp(50, 0.08, rng);
    std::vector<Vertex> all(50);
    for (Vertex v = 0; v < 50; ++v) all[v] = v;
    EXPECT_EQ(diameter_within(g, VertexSet::full(50)), oracle::diameter_floyd(g, all));
  }
}

TEST(Connectivity, ShortestPathRespectsRestriction) {
  const Graph c = cycle_graph(6);
  const auto direct = shortest_path(c, 0, 2, VertexSet::full(6));
  ASSERT_TRUE(direct);
  EXPECT_EQ(*direct, (std::vector<Vertex>{0, 1, 2}));
  VertexSet no_one = VertexSet::full(6);
  no_one.erase(1);
  const auto around = shortest_path(c, 0, 2, no_one);
  ASSERT_TRUE(around);
  EXPECT_EQ(around->size(), 5u);
  no_one.erase(4);
  EXPECT_FALSE(shortest_path(c, 0, 2, no_one));
}

TEST(Expansion, CompleteGraphExpands) {
  const auto r = check_vertex_expansion(complete_graph(6), VertexSet::full(6), 1, {3, 1});
  EXPECT_TRUE(r.ok());
}

TEST(Expansion, CycleFailsEverywhere) {
  const auto r = check_vertex_expansion(cycle_graph(6), VertexSet::full(6), 1, {3, 1});
  EXPECT_EQ(r.violations.size(), 6u);
}

TEST(Expansion, CoreMatchesSubsetOracle) {
  Rng rng(12, "expansion");
  const Graph g = oracle::gnp(200, 12.0 / 200, rng);
  const VertexSet core = peel_core(g, 8);
  ASSERT_FALSE(core.empty());
  const Ratio f{7, 1};
  const auto rep = check_vertex_expansion(g, core, 2, f);
  const auto mask = as_mask(core);
  std::vector<std::vector<Vertex>> expected;
  for (const auto& s : oracle::all_subsets(core.members(), 2)) {
    if (oracle::neighbor_count(g, s, mask) < 7 * s.size()) expected.push_back(s);
  }
  std::vector<std::vector<Vertex>> got;
  for (const auto& v : rep.violations) got.push_back(v.set);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(Expansion, BipartitePrivateNeighbors) {
  // W = {0..3}, each with 20 private neighbors in U.
  Graph g(84);
  VertexSet u(84), w(84);
  for (Vertex x = 0; x < 4; ++x) {
    w.insert(x);
    for (Vertex j = 0; j < 20; ++j) {
      const Vertex y = 4 + 20 * x + j;
      u.insert(y);
      g.add_edge(x, y);
    }
  }
  EXPECT_TRUE(check_bipartite_expansion(g, u, w, 4, {8, 1}).ok());
}

TEST(Expansion, BipartiteSingleHub) {
  Graph g(6);
  VertexSet u(6), w(6);
  u.insert(0);
  for (Vertex x = 1; x < 6; ++x) {
    w.insert(x);
    g.add_edge(0, x);
  }
  const auto r = check_bipartite_expansion(g, u, w, 2, {8, 1});
  EXPECT_EQ(r.violations.size(), 5u + 10u);
}

TEST(Expansion, BipartiteMatchesOracle) {
  Rng rng(31, "bip");
  const std::size_t nu = 300, nw = 60;
  Graph g(nu + nw);
  VertexSet u(nu + nw), w(nu + nw);
  for (Vertex x = 0; x < nu; ++x) u.insert(x);
  for (Vertex x = nu; x < nu + nw; ++x) {
    w.insert(x);
    while (g.degree(x) < 20) g.add_edge(x, static_cast<Vertex>(rng.uniform(nu)));
  }
  const Ratio f{19, 1};
  const auto rep = check_bipartite_expansion(g, u, w, 2, f);
  std::size_t expected = 0;
  for (const auto& s : oracle::all_subsets(w.members(), 2)) {
    if (oracle::neighbor_count(g, s, as_mask(u)) <= 19 * s.size()) ++expected;
  }
  EXPECT_EQ(rep.violations.size(), expected);
  EXPECT_GT(expected, 0u);
}

TEST(Expansion, ExhaustiveBudgetThrows) {
  ExpansionOptions o;
  o.subset_budget = 10;
  EXPECT_THROW(check_vertex_expansion(complete_graph(30), VertexSet::full(30), 3, {1, 1}, o),
               std::invalid_argument);
}

TEST(Expansion, SampledFindsViolationsOnCycle) {
  ExpansionOptions o;
  o.mode = CheckMode::Sampled;
  o.samples = 200;
  const auto r = check_vertex_expansion(cycle_graph(40), VertexSet::full(40), 3, {3, 1}, o);
  EXPECT_EQ(r.mode, CheckMode::Sampled);
  EXPECT_EQ(r.sets_checked, 200u);
  EXPECT_FALSE(r.ok());
}
