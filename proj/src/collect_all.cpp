#include <algorithm>

#include "achlioptas/strategies.hpp"

namespace achlioptas {

namespace {

std::optional<Cycle> certify(const Graph& g, const CollectAllOptions& options, std::uint64_t t) {
  if (g.min_degree() < 2) return std::nullopt;
  // Each probe gets its own seed so a refinement step does not depend on
  // which probes ran before it.
  return hamiltonicity_search(g, options.restarts, options.seed ^ splitmix64(t));
}

}  // namespace

CollectAllReport collect_all_analyze(std::size_t n, const std::vector<LedgerEntry>& ledger,
                                     const CollectAllOptions& options) {
  CollectAllReport report;
  report.rounds = ledger.size();
  Graph g(n);
  std::size_t low_degree = n;  // vertices of degree < 2
  for (std::uint64_t t = 0; t < ledger.size(); ++t) {
    for (const Edge& e : ledger[t].candidates) {
      if (!g.add_edge(e)) continue;
      for (Vertex v : {e.u, e.v}) {
        if (g.degree(v) == 2) --low_degree;
      }
    }
    if (!report.min_degree_2_round && low_degree == 0) report.min_degree_2_round = t + 1;
  }
  report.union_edges = g.edge_count();
  if (!report.min_degree_2_round) return report;

  const std::uint64_t step =
      options.check_every != 0 ? options.check_every : std::max<std::uint64_t>(1, n / 50);
  std::uint64_t fail_at = *report.min_degree_2_round - 1;  // last probe known to fail
  std::optional<std::uint64_t> hit;
  for (std::uint64_t t = *report.min_degree_2_round;; t = std::min<std::uint64_t>(t + step, ledger.size())) {
    if (auto cycle = certify(union_graph(n, ledger, t), options, t)) {
      hit = t;
      report.cycle = std::move(*cycle);
      break;
    }
    fail_at = t;
    if (t == ledger.size()) break;
  }
  if (!hit) return report;
  // Bisect between the last failing probe and the first certified one.
  std::uint64_t lo = fail_at;
  std::uint64_t hi = *hit;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (auto cycle = certify(union_graph(n, ledger, mid), options, mid)) {
      hi = mid;
      report.cycle = std::move(*cycle);
    } else {
      lo = mid;
    }
  }
  report.hamiltonian_round = hi;
  return report;
}

}  // namespace achlioptas
