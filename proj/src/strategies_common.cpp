#include <algorithm>
#include <stdexcept>
#include <string>

#include "achlioptas/strategies.hpp"

namespace achlioptas {

std::string_view to_string(Preset preset) {
  return preset == Preset::Fidelity ? "fidelity" : "desk";
}

Preset parse_preset(std::string_view text) {
  if (text == "fidelity") return Preset::Fidelity;
  if (text == "desk") return Preset::Desk;
  throw std::invalid_argument("unknown preset '" + std::string(text) +
                              "' (expected fidelity or desk)");
}

bool PathCover::valid(const Graph& g) const {
  VertexSet seen(g.vertex_count());
  for (const Path& p : paths) {
    if (p.empty() || !is_valid_path(g, p)) return false;
    for (Vertex v : p) {
      if (!seen.insert(v)) return false;
    }
  }
  return seen == covered;
}

Cycle patch_cycles(const Cycle& cx, const Cycle& cy, Vertex x, Vertex y) {
  const auto ix = std::find(cx.begin(), cx.end(), x);
  const auto iy = std::find(cy.begin(), cy.end(), y);
  if (ix == cx.end() || iy == cy.end()) {
    throw std::invalid_argument("patch_cycles: x or y is not on its cycle");
  }
  const std::size_t px = static_cast<std::size_t>(ix - cx.begin());
  const std::size_t py = static_cast<std::size_t>(iy - cy.begin());
  // x⁺ ... x, then y, y⁻, ..., y⁺, and back to x⁺.
  Cycle out;
  out.reserve(cx.size() + cy.size());
  for (std::size_t j = 1; j <= cx.size(); ++j) out.push_back(cx[(px + j) % cx.size()]);
  for (std::size_t j = 0; j < cy.size(); ++j) out.push_back(cy[(py + cy.size() - j) % cy.size()]);
  return out;
}

FirstEdgeBaseline::FirstEdgeBaseline(std::uint64_t certify_every, std::size_t restarts)
    : certify_every_(certify_every), restarts_(restarts) {}

void FirstEdgeBaseline::prepare(const Graph& g, Rng& rng) {
  if (certify_every_ == 0 || status_.terminal() || rounds_ < next_check_) return;
  if (g.min_degree() < 2) return;
  next_check_ = rounds_ + certify_every_;
  if (auto cycle = hamiltonicity_search(g, restarts_, rng.next())) {
    status_.state = StrategyState::Succeeded;
    status_.cycle = std::move(*cycle);
  }
}

Graph union_graph(std::size_t n, const std::vector<LedgerEntry>& ledger, std::uint64_t rounds) {
  Graph g(n);
  const std::uint64_t upto = std::min<std::uint64_t>(rounds, ledger.size());
  for (std::uint64_t t = 0; t < upto; ++t) {
    for (const Edge& e : ledger[t].candidates) g.add_edge(e);
  }
  return g;
}

Graph chosen_graph(std::size_t n, const std::vector<LedgerEntry>& ledger, std::uint64_t rounds) {
  Graph g(n);
  const std::uint64_t upto = std::min<std::uint64_t>(rounds, ledger.size());
  for (std::uint64_t t = 0; t < upto; ++t) {
    const LedgerEntry& entry = ledger[t];
    if (entry.applied && entry.choice) g.add_edge(entry.candidates.at(*entry.choice));
  }
  return g;
}

std::size_t degree_deficiency_probe(const RunRecord& record, std::size_t d, std::uint64_t t) {
  if (record.ledger.size() != record.total_rounds) {
    throw std::invalid_argument("degree_deficiency_probe: run record has no ledger");
  }
  if (t > record.ledger.size()) {
    throw std::out_of_range("degree_deficiency_probe: T=" + std::to_string(t) + " exceeds the " +
                            std::to_string(record.ledger.size()) + " recorded rounds");
  }
  const Graph g = chosen_graph(record.n, record.ledger, t);
  std::size_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) count += g.degree(v) < d ? 1 : 0;
  return count;
}

}  // namespace achlioptas
