#pragma once

// Criticality analysis for the packing chromatic number. A graph is
// chi_rho-vertex-critical when deleting any single vertex lowers chi_rho, and
// chi_rho-critical when every proper subgraph has smaller chi_rho. Because
// chi_rho is monotone under subgraphs, the latter reduces to checking single
// vertex deletions plus single edge deletions.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pcolor/graph.hpp"
#include "pcolor/packing.hpp"

namespace pcolor {

struct CriticalityReport {
  int chi = 0;  // chi_rho of the input graph
  std::vector<std::pair<Vertex, int>> vertex_deltas;  // (v, chi - chi(G - v))
  std::vector<std::pair<Edge, int>> edge_deltas;      // (e, chi - chi(G - e))
  bool vertex_critical = false;
  bool subgraph_critical = false;

  std::string to_text() const {
    std::ostringstream out;
    out << "chi_rho = " << chi << "\n";
    for (const auto& [v, delta] : vertex_deltas)
      out << "v " << v << " " << delta << "\n";
    for (const auto& [e, delta] : edge_deltas)
      out << "e " << e.first << " " << e.second << " " << delta << "\n";
    out << "vertex_critical = " << (vertex_critical ? "yes" : "no") << "\n";
    out << "subgraph_critical = " << (subgraph_critical ? "yes" : "no") << "\n";
    return out.str();
  }
};

namespace detail {

// chi_rho extended to the empty graph (0), so deletion sweeps on K1 work.
inline int chi_rho_or_zero(const Graph& g) {
  return g.order() == 0 ? 0 : chi_rho(g).value;
}

}  // namespace detail

// Full deletion sweep. Edge deltas are only computed when every vertex
// deletion already dropped chi_rho, since subgraph-criticality is decided by
// the conjunction and callers that stop at vertex-criticality shouldn't pay
// for the edge sweep.
inline CriticalityReport analyze_criticality(const Graph& g) {
  if (g.order() == 0) throw error("criticality of the empty graph is undefined");
  CriticalityReport report;
  report.chi = chi_rho(g).value;
  report.vertex_critical = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    int delta = report.chi - detail::chi_rho_or_zero(delete_vertex(g, v));
    report.vertex_deltas.emplace_back(v, delta);
    if (delta <= 0) report.vertex_critical = false;
  }
  if (report.vertex_critical) {
    report.subgraph_critical = true;
    for (const Edge& e : g.edges()) {
      int delta = report.chi - chi_rho(delete_edge(g, e)).value;
      report.edge_deltas.emplace_back(e, delta);
      if (delta <= 0) report.subgraph_critical = false;
    }
  }
  return report;
}

// Decision-only variants with early exit; used by the exhaustive harnesses
// where most inputs fail on the first deletion tried.
inline bool is_k_vertex_critical(const Graph& g, int k) {
  if (g.order() == 0) return false;
  if (chi_rho(g).value != k) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (detail::chi_rho_or_zero(delete_vertex(g, v)) >= k) return false;
  return true;
}

inline bool is_k_critical(const Graph& g, int k) {
  if (!is_k_vertex_critical(g, k)) return false;
  for (const Edge& e : g.edges())
    if (chi_rho(delete_edge(g, e)).value >= k) return false;
  return true;
}

}  // namespace pcolor
