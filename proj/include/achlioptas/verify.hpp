#pragma once

// Structural checks on produced graphs. Every failing report carries at least
// one witness that can be re-checked against the graph directly.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "achlioptas/expansion.hpp"
#include "achlioptas/graph.hpp"
#include "achlioptas/posa.hpp"

namespace achlioptas {

struct Witness {
  /// "set", "pair", "core", "cycle", ...
  std::string kind;
  std::vector<Vertex> vertices;
  /// Meaning depends on the lemma: neighbor count, edge count, distance, size.
  long long value = 0;
};

struct LemmaReport {
  std::string lemma;
  std::vector<std::pair<std::string, double>> parameters;
  bool passed = false;
  std::vector<Witness> witnesses;
  /// "exhaustive", "sampled" or "direct".
  std::string mode = "direct";
  std::uint64_t sets_checked = 0;

  /// "pass", "fail", or "pass (sampled, N sets)".
  std::string verdict() const;
};

/// Lemma ids accepted by run_lemma.
const std::vector<std::string>& lemma_ids();

/// |D-core| >= (1 - 1/D) n. A failing report's witness is the core.
LemmaReport verify_core_size(const Graph& g, std::size_t d);

/// No set of at most s_max vertices induces average degree above k/4.
LemmaReport verify_avg_degree(const Graph& g, std::size_t k, std::size_t s_max,
                              const ExpansionOptions& options = {});

/// Every nonempty S ⊆ within with |S| <= s_max has at least factor·|S|
/// neighbors in within \ S (strictly more when `required` says so).
LemmaReport verify_vertex_expansion(const Graph& g, const VertexSet& within, std::size_t s_max,
                                    Ratio factor, const ExpansionOptions& options = {},
                                    Inequality required = Inequality::AtLeast);

/// Every nonempty S ⊆ w_side with |S| <= s_max has more than factor·|S| neighbors in u_side.
LemmaReport verify_bipartite_expansion(const Graph& g, const VertexSet& u_side,
                                       const VertexSet& w_side, std::size_t s_max, Ratio factor,
                                       const ExpansionOptions& options = {});

/// The subgraph induced by `within` is connected.
LemmaReport verify_connectivity(const Graph& g, const VertexSet& within);

/// B is X \ A minus the D_exp-core of X \ A. Passes iff |B| <= |A| and the
/// core has diameter at most `bound`.
LemmaReport verify_resilient_diameter(const Graph& g, const VertexSet& x, const VertexSet& a,
                                      std::size_t d_exp, std::size_t bound);

/// Every vertex exactly once, consecutive and wraparound pairs are edges.
bool verify_certificate(const Graph& g, const Cycle& cycle);
LemmaReport certificate_report(const Graph& g, const Cycle& cycle);

/// 3 ln m, the diameter contract used for resilient expanders.
std::size_t resilient_diameter_bound(std::size_t m);

}  // namespace achlioptas
