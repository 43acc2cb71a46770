#include "achlioptas/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "achlioptas/algorithms.hpp"
#include "achlioptas/rng.hpp"

namespace achlioptas {

namespace {

constexpr std::size_t kMaxWitnesses = 100;

std::size_t induced_edges(const Graph& g, std::span<const Vertex> s) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e += g.has_edge(s[i], s[j]) ? 1 : 0;
  return e;
}

LemmaReport from_expansion(std::string lemma, const ExpansionReport& r,
                           std::vector<std::pair<std::string, double>> params) {
  LemmaReport out;
  out.lemma = std::move(lemma);
  out.parameters = std::move(params);
  out.mode = std::string(to_string(r.mode));
  out.sets_checked = r.sets_checked;
  out.passed = r.ok();
  for (const auto& v : r.violations) {
    if (out.witnesses.size() == kMaxWitnesses) break;
    out.witnesses.push_back({"set", v.set, static_cast<long long>(v.neighbor_count)});
  }
  return out;
}

}  // namespace

std::string LemmaReport::verdict() const {
  if (!passed) return "fail";
  if (mode == "sampled") return "pass (sampled, " + std::to_string(sets_checked) + " sets)";
  return "pass";
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"core-size",          "avg-degree",
                                            "vertex-expansion",   "bipartite-expansion",
                                            "connectivity",       "resilient-diameter",
                                            "certificate"};
  return ids;
}

std::size_t resilient_diameter_bound(std::size_t m) {
  return static_cast<std::size_t>(std::floor(3 * std::log(std::max<double>(static_cast<double>(m), 2.0))));
}

LemmaReport verify_core_size(const Graph& g, std::size_t d) {
  if (d < 1) throw std::invalid_argument("verify_core_size: D must be at least 1");
  const VertexSet core = peel_core(g, d);
  LemmaReport r;
  r.lemma = "core-size";
  r.parameters = {{"D", static_cast<double>(d)}, {"n", static_cast<double>(g.vertex_count())}};
  // |core| >= (1 - 1/D) n, in integers.
  r.passed = core.size() * d >= (d - 1) * g.vertex_count();
  if (!r.passed) r.witnesses.push_back({"core", core.members(), static_cast<long long>(core.size())});
  return r;
}

LemmaReport verify_avg_degree(const Graph& g, std::size_t k, std::size_t s_max,
                              const ExpansionOptions& options) {
  LemmaReport r;
  r.lemma = "avg-degree";
  r.parameters = {{"k", static_cast<double>(k)}, {"s_max", static_cast<double>(s_max)}};
  r.mode = std::string(to_string(options.mode));
  const std::size_t n = g.vertex_count();
  s_max = std::min(s_max, n);
  // Average degree 2e/|S| exceeds k/4 iff 8e > k|S|.
  const auto check = [&](std::span<const Vertex> s) {
    ++r.sets_checked;
    const std::size_t e = induced_edges(g, s);
    if (8 * e > k * s.size() && r.witnesses.size() < kMaxWitnesses) {
      std::vector<Vertex> set(s.begin(), s.end());
      std::sort(set.begin(), set.end());
      r.witnesses.push_back({"set", std::move(set), static_cast<long long>(e)});
    }
  };
  if (s_max == 0) {
    r.passed = true;
    return r;
  }
  if (options.mode == CheckMode::Exhaustive) {
    if (subset_count(n, s_max) > options.subset_budget) {
      throw std::invalid_argument("verify_avg_degree: exhaustive check exceeds the subset budget; use sampled mode");
    }
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    for_each_subset(all, s_max, [&](std::span<const Vertex> s) {
      check(s);
      return true;
    });
  } else {
    Rng rng(options.seed, "avg-degree-sampler");
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    std::vector<Vertex> set;
    for (std::size_t i = 0; i < options.samples; ++i) {
      const std::size_t size = 1 + rng.uniform(s_max);
      set.clear();
      if (i % 2 == 0) {
        // Uniform set of the drawn size.
        for (std::size_t j = 0; j < size; ++j) {
          std::swap(pool[j], pool[j + rng.uniform(n - j)]);
          set.push_back(pool[j]);
        }
      } else {
        // Dense candidate: grow from a random vertex, always adding the
        // outside neighbor with the most edges into the set.
        std::vector<std::size_t> into(n, 0);
        std::vector<std::uint8_t> in(n, 0);
        std::vector<Vertex> frontier;
        auto add = [&](Vertex v) {
          in[v] = 1;
          set.push_back(v);
          for (Vertex w : g.neighbors(v)) {
            if (!in[w] && into[w]++ == 0) frontier.push_back(w);
          }
        };
        add(static_cast<Vertex>(rng.uniform(n)));
        while (set.size() < size) {
          frontier.erase(std::remove_if(frontier.begin(), frontier.end(),
                                        [&](Vertex w) { return in[w] != 0; }),
                         frontier.end());
          if (frontier.empty()) break;
          Vertex best = frontier.front();
          for (Vertex w : frontier)
            if (into[w] > into[best]) best = w;
          add(best);
        }
      }
      check(set);
    }
  }
  r.passed = r.witnesses.empty();
  return r;
}

LemmaReport verify_vertex_expansion(const Graph& g, const VertexSet& within, std::size_t s_max,
                                    Ratio factor, const ExpansionOptions& options,
                                    Inequality required) {
  const auto rep = check_vertex_expansion(g, within, s_max, factor, options, required);
  return from_expansion("vertex-expansion", rep,
                        {{"s_max", static_cast<double>(s_max)},
                         {"factor", static_cast<double>(factor.num) / static_cast<double>(factor.den)},
                         {"strict", required == Inequality::StrictlyMore ? 1.0 : 0.0}});
}

LemmaReport verify_bipartite_expansion(const Graph& g, const VertexSet& u_side,
                                       const VertexSet& w_side, std::size_t s_max, Ratio factor,
                                       const ExpansionOptions& options) {
  const auto rep = check_bipartite_expansion(g, u_side, w_side, s_max, factor, options);
  return from_expansion("bipartite-expansion", rep,
                        {{"s_max", static_cast<double>(s_max)},
                         {"factor", static_cast<double>(factor.num) / static_cast<double>(factor.den)}});
}

LemmaReport verify_connectivity(const Graph& g, const VertexSet& within) {
  LemmaReport r;
  r.lemma = "connectivity";
  r.parameters = {{"vertices", static_cast<double>(within.size())}};
  r.passed = connected_within(g, within);
  if (!r.passed) {
    // Witness: the component of the smallest member.
    const auto members = within.members();
    const auto dist = bfs_distances(g, members.front(), within);
    std::vector<Vertex> comp;
    for (Vertex v : members)
      if (dist[v] >= 0) comp.push_back(v);
    r.witnesses.push_back({"component", std::move(comp), static_cast<long long>(members.size())});
  }
  return r;
}

LemmaReport verify_resilient_diameter(const Graph& g, const VertexSet& x, const VertexSet& a,
                                      std::size_t d_exp, std::size_t bound) {
  LemmaReport r;
  r.lemma = "resilient-diameter";
  r.parameters = {{"D_exp", static_cast<double>(d_exp)},
                  {"bound", static_cast<double>(bound)},
                  {"X", static_cast<double>(x.size())},
                  {"A", static_cast<double>(a.size())}};
  VertexSet rest = x;
  for (Vertex v : a.members()) rest.erase(v);
  const VertexSet core = peel_core(g, d_exp, rest);
  std::vector<Vertex> b;
  for (Vertex v : rest.members())
    if (!core.contains(v)) b.push_back(v);
  const auto diameter = diameter_within(g, core);
  const bool small_b = b.size() <= a.size();
  const bool short_d = diameter && *diameter <= bound;
  r.passed = small_b && short_d;
  if (!small_b) r.witnesses.push_back({"removed", b, static_cast<long long>(b.size())});
  if (!short_d) {
    // A pair at distance above the bound, or in different components (-1).
    const auto members = core.members();
    for (Vertex s : members) {
      const auto dist = bfs_distances(g, s, core);
      bool found = false;
      for (Vertex t : members) {
        if (dist[t] < 0 || dist[t] > static_cast<long>(bound)) {
          r.witnesses.push_back({"pair", {s, t}, dist[t]});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  return r;
}

bool verify_certificate(const Graph& g, const Cycle& cycle) { return verify_hamilton_cycle(g, cycle); }

LemmaReport certificate_report(const Graph& g, const Cycle& cycle) {
  LemmaReport r;
  r.lemma = "certificate";
  r.parameters = {{"n", static_cast<double>(g.vertex_count())},
                  {"length", static_cast<double>(cycle.size())}};
  r.passed = verify_certificate(g, cycle);
  if (r.passed) return r;
  if (cycle.size() != g.vertex_count()) {
    r.witnesses.push_back({"length", {}, static_cast<long long>(cycle.size())});
  }
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex v = cycle[i];
    if (v >= g.vertex_count()) {
      r.witnesses.push_back({"out-of-range", {v}, static_cast<long long>(i)});
      return r;
    }
    if (seen[v]++) r.witnesses.push_back({"repeated", {v}, static_cast<long long>(i)});
    const Vertex w = cycle[(i + 1) % cycle.size()];
    if (w < g.vertex_count() && !g.has_edge(v, w)) {
      r.witnesses.push_back({"non-edge", {v, w}, static_cast<long long>(i)});
    }
    if (r.witnesses.size() >= kMaxWitnesses) break;
  }
  if (r.witnesses.empty()) r.witnesses.push_back({"cycle", cycle, 0});
  return r;
}

}  // namespace achlioptas
