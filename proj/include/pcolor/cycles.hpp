#pragma once

// Which cycle lengths occur as subgraphs. Exhaustive DFS over simple cycles,
// each counted once via the smallest-vertex-root convention; stops early once
// every length 3..n has been seen.

#include <set>

#include "pcolor/graph.hpp"

namespace pcolor {

inline std::set<int> cycle_spectrum(const Graph& g) {
  int n = g.order();
  if (n > 12) throw error("cycle_spectrum supports order <= 12");
  std::set<int> spectrum;
  if (n < 3) return spectrum;
  const size_t all_lengths = static_cast<size_t>(n - 2);  // 3..n
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<Vertex> path;
  bool complete = false;

  auto dfs = [&](auto&& self, Vertex root, Vertex v) -> void {
    if (complete) return;
    for (Vertex w : g.neighbors(v)) {
      if (complete) return;
      if (w == root && path.size() >= 3) {
        spectrum.insert(static_cast<int>(path.size()));
        if (spectrum.size() == all_lengths) {
          complete = true;
          return;
        }
      } else if (w > root && !used[static_cast<size_t>(w)]) {
        used[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        self(self, root, w);
        path.pop_back();
        used[static_cast<size_t>(w)] = 0;
      }
    }
  };

  for (Vertex root = 0; root < n && !complete; ++root) {
    used.assign(static_cast<size_t>(n), 0);
    used[static_cast<size_t>(root)] = 1;
    path.assign(1, root);
    dfs(dfs, root, root);
  }
  return spectrum;
}

}  // namespace pcolor
