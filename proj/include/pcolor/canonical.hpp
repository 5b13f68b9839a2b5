#pragma once

// Exact canonical labeling for small graphs: iterated degree/distance
// refinement to split vertices into invariant cells, then a DFS over
// cell-respecting orderings that minimizes the graph6 bit string, with
// lexicographic prefix pruning and a sound twin-skip rule. Equal certificate
// bytes <=> isomorphic. The public entry point is capped at order 12 (the
// promised exact range); the detail entry point runs for any order <= 62 and
// is used internally where larger family members must be deduplicated.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcolor/distance.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/graph6.hpp"

namespace pcolor {

struct CanonicalForm {
  std::string bytes;               // graph6 of the canonical relabeling
  std::vector<Edge> edges;         // canonical edge set
  std::vector<Vertex> relabeling;  // original vertex -> canonical position

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) {
    return !(a == b);
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes < b.bytes;
  }
};

namespace detail {

// Partition vertices into cells by an iterated relabeling-invariant key:
// seed = (degree, sorted distance row), then refine by sorted neighbor-color
// multisets until stable. Returns per-vertex color ids; ids are indices into
// the sorted key order, hence invariant under vertex relabeling.
inline std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  DistanceMatrix dm = all_pairs_distances(g);
  std::vector<std::vector<int>> keys(static_cast<size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto& key = keys[static_cast<size_t>(v)];
    key.push_back(g.degree(v));
    std::vector<int> row;
    for (Vertex w = 0; w < n; ++w) row.push_back(dm(v, w));
    std::sort(row.begin(), row.end());
    key.insert(key.end(), row.begin(), row.end());
  }
  auto assign = [n](const std::vector<std::vector<int>>& ks) {
    std::vector<std::vector<int>> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v)
      colors[static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), ks[static_cast<size_t>(v)]) -
          sorted.begin());
    return colors;
  };
  std::vector<int> colors = assign(keys);
  while (true) {
    std::vector<std::vector<int>> next(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto& key = next[static_cast<size_t>(v)];
      key.push_back(colors[static_cast<size_t>(v)]);
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v)) nb.push_back(colors[static_cast<size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
    }
    std::vector<int> refined = assign(next);
    if (refined == colors) return colors;
    colors = refined;
  }
}

inline CanonicalForm canonical_form_unchecked(const Graph& g) {
  int n = g.order();
  if (n > 62) throw error("canonical form supports order <= 62");
  if (n == 0) return CanonicalForm{to_graph6(g), {}, {}};

  std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<size_t>(e.first)] |= uint64_t{1} << e.second;
    adj[static_cast<size_t>(e.second)] |= uint64_t{1} << e.first;
  }

  std::vector<int> colors = refine_colors(g);
  // cells[c] lists the vertices of color c in id order; positions walk the
  // cells in color order, so the candidate orderings are exactly the
  // cell-respecting ones — a relabeling-invariant set.
  int ncolors = 0;
  for (int c : colors) ncolors = std::max(ncolors, c + 1);
  std::vector<std::vector<Vertex>> cells(static_cast<size_t>(ncolors));
  for (Vertex v = 0; v < n; ++v) cells[static_cast<size_t>(colors[static_cast<size_t>(v)])].push_back(v);
  std::vector<int> cell_of_position(static_cast<size_t>(n));
  {
    int pos = 0;
    for (int c = 0; c < ncolors; ++c)
      for (size_t i = 0; i < cells[static_cast<size_t>(c)].size(); ++i)
        cell_of_position[static_cast<size_t>(pos++)] = c;
  }

  std::vector<Vertex> ordering(static_cast<size_t>(n), -1);
  std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
  std::vector<Vertex> best_ordering;
  std::vector<uint64_t> best_rows;
  bool have_best = false;
  uint64_t placed = 0;

  // Compares rows[0..upto] against best_rows[0..upto]; -1/0/1 in prefix
  // lexicographic order. The comparison always runs against the current best,
  // so pruning stays sound after the best is replaced mid-search.
  auto compare_prefix = [&rows, &best_rows](int upto) {
    for (int i = 0; i <= upto; ++i) {
      if (rows[static_cast<size_t>(i)] != best_rows[static_cast<size_t>(i)])
        return rows[static_cast<size_t>(i)] < best_rows[static_cast<size_t>(i)] ? -1 : 1;
    }
    return 0;
  };
  auto dfs = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (!have_best || compare_prefix(n - 1) < 0) {
        best_rows = rows;
        best_ordering = ordering;
        have_best = true;
      }
      return;
    }
    const auto& cell = cells[static_cast<size_t>(cell_of_position[static_cast<size_t>(k)])];
    std::vector<Vertex> tried;
    for (Vertex u : cell) {
      if (placed & (uint64_t{1} << u)) continue;
      bool skip = false;
      for (Vertex t : tried) {
        uint64_t pair = (uint64_t{1} << u) | (uint64_t{1} << t);
        if ((adj[static_cast<size_t>(u)] & ~pair) == (adj[static_cast<size_t>(t)] & ~pair)) {
          skip = true;  // (u t) is an automorphism; subtree already explored
          break;
        }
      }
      if (skip) continue;
      tried.push_back(u);
      uint64_t word = 0;
      for (int j = 0; j < k; ++j) {
        word <<= 1;
        if (adj[static_cast<size_t>(u)] & (uint64_t{1} << ordering[static_cast<size_t>(j)])) word |= 1;
      }
      rows[static_cast<size_t>(k)] = word;
      if (have_best && compare_prefix(k) > 0) continue;  // prefix already larger
      ordering[static_cast<size_t>(k)] = u;
      placed |= uint64_t{1} << u;
      self(self, k + 1);
      placed &= ~(uint64_t{1} << u);
    }
  };
  dfs(dfs, 0);

  std::vector<Vertex> relabeling(static_cast<size_t>(n));
  for (int pos = 0; pos < n; ++pos)
    relabeling[static_cast<size_t>(best_ordering[static_cast<size_t>(pos)])] = pos;
  Graph canon = relabel(g, relabeling);
  return CanonicalForm{to_graph6(canon), canon.edges(), relabeling};
}

inline constexpr int kCanonicalCap = 12;

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > detail::kCanonicalCap)
    throw error("canonical_form supports order <= 12, got " +
                std::to_string(g.order()));
  return detail::canonical_form_unchecked(g);
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    if (g.order() > detail::kCanonicalCap || h.order() > detail::kCanonicalCap)
      throw error("are_isomorphic supports order <= 12");
    return false;
  }
  if (g.size() != h.size()) return false;
  return canonical_form(g).bytes == canonical_form(h).bytes;
}

// Vertex map g -> h witnessing isomorphism, or nullopt.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g,
                                                           const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  CanonicalForm cg = canonical_form(g), ch = canonical_form(h);
  if (cg.bytes != ch.bytes) return std::nullopt;
  std::vector<Vertex> inv_h(static_cast<size_t>(h.order()));
  for (Vertex v = 0; v < h.order(); ++v)
    inv_h[static_cast<size_t>(ch.relabeling[static_cast<size_t>(v)])] = v;
  std::vector<Vertex> map(static_cast<size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    map[static_cast<size_t>(v)] = inv_h[static_cast<size_t>(cg.relabeling[static_cast<size_t>(v)])];
  return map;
}

}  // namespace pcolor
