#pragma once

// Exact packing-coloring machinery: a coloring c is valid when any two
// vertices sharing color i are at distance > i. chi_rho is the least k
// admitting a valid coloring with colors 1..k. Backtracking solver with
// deterministic order (vertices by descending degree then id, colors
// ascending), per-color forbidden-count pruning, component decomposition, and
// a clique-based start bound.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcolor/distance.hpp"
#include "pcolor/graph.hpp"

namespace pcolor {

struct PackingColoring {
  std::map<Vertex, int> assignment;  // every vertex of the target graph
  int k = 0;                         // number of colors permitted

  std::string to_text() const {
    std::ostringstream out;
    for (const auto& [v, c] : assignment) out << v << " " << c << "\n";
    return out.str();
  }
};

inline bool is_valid(const Graph& g, const PackingColoring& c) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto it = c.assignment.find(v);
    if (it == c.assignment.end())
      throw error("unassigned vertex " + std::to_string(v));
    if (it->second < 1 || it->second > c.k)
      throw error("color " + std::to_string(it->second) + " outside 1.." +
                  std::to_string(c.k));
  }
  DistanceMatrix dm = all_pairs_distances(g);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      int cu = c.assignment.at(u), cv = c.assignment.at(v);
      if (cu == cv && dm(u, v) != kInfinity && dm(u, v) <= cu) return false;
    }
  return true;
}

// Structural lower bound, per component: 1 for edgeless, 2 for a star with
// an edge (color 1 on the leaves, 2 on the center), 3 for any other
// connected graph with an edge; max over components. Never exceeds chi_rho.
inline int lower_bound(const Graph& g) {
  int bound = g.order() >= 1 ? 1 : 0;
  for (const auto& comp : connected_components(g)) {
    Graph c = induced_subgraph(g, comp);
    int b = c.size() == 0 ? 1 : (is_star(c) ? 2 : 3);
    bound = std::max(bound, b);
  }
  return bound;
}

namespace detail {

// Max clique by branch and bound over bitmasks (order <= 62); the clique
// number is a sound chi_rho lower bound because chi_rho(K_m) = m and chi_rho
// is hereditary.
inline int clique_number(const Graph& g) {
  int n = g.order();
  if (n == 0 || n > 62) return 0;
  std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<size_t>(e.first)] |= uint64_t{1} << e.second;
    adj[static_cast<size_t>(e.second)] |= uint64_t{1} << e.first;
  }
  int best = 0;
  auto expand = [&](auto&& self, uint64_t cand, int size) -> void {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    while (cand) {
      if (size + __builtin_popcountll(cand) <= best) return;
      int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      self(self, cand & adj[static_cast<size_t>(v)], size + 1);
    }
  };
  expand(expand, n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1), 0);
  return best;
}

}  // namespace detail

inline std::optional<PackingColoring> find_k_packing_coloring(const Graph& g,
                                                              int k) {
  if (k < 1) throw error("find_k_packing_coloring needs k >= 1");
  int n = g.order();
  PackingColoring result;
  result.k = k;
  if (n == 0) return result;

  DistanceMatrix dm = all_pairs_distances(g);
  std::vector<Vertex> order(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  // forbid[c][v] counts colored vertices of color c+1 within distance c+1 of
  // v; a candidate (v, c) is allowed iff the count is zero.
  std::vector<std::vector<int>> forbid(static_cast<size_t>(k),
                                       std::vector<int>(static_cast<size_t>(n), 0));
  std::vector<int> color_of(static_cast<size_t>(n), 0);

  auto mark = [&](Vertex v, int color, int delta) {
    auto& row = forbid[static_cast<size_t>(color - 1)];
    for (Vertex w = 0; w < n; ++w)
      if (dm(v, w) != kInfinity && dm(v, w) <= color) row[static_cast<size_t>(w)] += delta;
  };

  auto solve = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    Vertex v = order[static_cast<size_t>(idx)];
    for (int c = 1; c <= k; ++c) {
      if (forbid[static_cast<size_t>(c - 1)][static_cast<size_t>(v)] != 0) continue;
      color_of[static_cast<size_t>(v)] = c;
      mark(v, c, +1);
      if (self(self, idx + 1)) return true;
      mark(v, c, -1);
      color_of[static_cast<size_t>(v)] = 0;
    }
    return false;
  };

  if (!solve(solve, 0)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) result.assignment[v] = color_of[static_cast<size_t>(v)];
  return result;
}

struct ChiRhoResult {
  int value = 0;
  PackingColoring witness;
  std::string lower_bound_trace;
};

inline ChiRhoResult chi_rho(const Graph& g) {
  if (g.order() == 0) throw error("chi_rho undefined for the empty graph");
  // Solve per component (cross-component distances are infinite, so colorings
  // never interact); the value is the max over components.
  auto comps = connected_components(g);
  ChiRhoResult result;
  result.witness.k = 0;
  std::ostringstream trace;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    Graph c = induced_subgraph(g, comp);
    int start = std::max(lower_bound(c), detail::clique_number(c));
    int k = std::max(start, 1);
    std::optional<PackingColoring> found;
    while (!(found = find_k_packing_coloring(c, k))) ++k;  // k <= order terminates
    if (ci > 0) trace << "; ";
    trace << "component " << ci << ": start k=" << std::max(start, 1)
          << " (lower_bound=" << lower_bound(c)
          << ", clique=" << detail::clique_number(c) << "), solved k=" << k;
    for (size_t i = 0; i < comp.size(); ++i)
      result.witness.assignment[comp[i]] = found->assignment.at(static_cast<Vertex>(i));
    result.value = std::max(result.value, k);
  }
  result.witness.k = result.value;
  result.lower_bound_trace = trace.str();
  return result;
}

// Closed forms for paths, cycles, cliques.
struct Shape {
  enum class Kind { path, cycle, clique } kind;
  int n;
};
inline Shape path_shape(int n) { return {Shape::Kind::path, n}; }
inline Shape cycle_shape(int n) { return {Shape::Kind::cycle, n}; }
inline Shape clique_shape(int n) { return {Shape::Kind::clique, n}; }

inline int chi_rho_closed_form(const Shape& s) {
  if (s.n < 1) throw error("closed form needs n >= 1");
  switch (s.kind) {
    case Shape::Kind::clique:
      return s.n;
    case Shape::Kind::path:
      if (s.n == 1) return 1;
      if (s.n <= 3) return 2;
      return 3;
    case Shape::Kind::cycle:
      if (s.n < 3) throw error("cycle needs n >= 3");
      if (s.n == 3 || s.n % 4 == 0) return 3;
      return 4;
  }
  throw error("unreachable shape kind");
}

}  // namespace pcolor
