#pragma once

// Exhaustive enumeration of connected graphs up to isomorphism, used by the
// theorem-verification harnesses. Trees are grown by leaf addition, then each
// edge-count level is produced from the previous one by single edge additions;
// both stages deduplicate through the canonical form. Every connected graph
// contains a spanning tree, so the sweep is exhaustive.

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcolor/canonical.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/graph6.hpp"

namespace pcolor {

namespace detail {

// All trees on n vertices up to isomorphism, as canonical representatives in
// deterministic order. Counts for n = 1.. are 1, 1, 1, 2, 3, 6, 11, 23, 47.
inline std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw error("enumerate_trees needs n >= 1");
  std::vector<Graph> level = {Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : level) {
      for (Vertex host = 0; host < t.order(); ++host) {
        Graph grown(t.order() + 1);
        for (const Edge& e : t.edges()) grown.add_edge(e.first, e.second);
        grown.add_edge(host, t.order());
        CanonicalForm form = canonical_form_unchecked(grown);
        if (!seen.insert(form.bytes).second) continue;
        next.push_back(relabel(grown, form.relabeling));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(), [](const Graph& x, const Graph& y) {
    return to_graph6(x) < to_graph6(y);
  });
  return level;
}

}  // namespace detail

// All connected graphs on n vertices up to isomorphism, as canonical
// representatives ordered by (edge count, canonical form). Counts for
// n = 1.. are 1, 1, 2, 6, 21, 112, 853, 11117, 261080; the cap keeps the
// largest run in check.
inline std::vector<Graph> enumerate_connected(int n) {
  if (n < 1) throw error("enumerate_connected needs n >= 1");
  if (n > 9) throw error("enumerate_connected supports n <= 9");
  std::vector<Graph> result;
  std::vector<Graph> level = detail::enumerate_trees(n);
  while (!level.empty()) {
    for (const Graph& g : level) result.push_back(g);
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph denser(n);
          for (const Edge& e : g.edges()) denser.add_edge(e.first, e.second);
          denser.add_edge(u, v);
          CanonicalForm form = detail::canonical_form_unchecked(denser);
          if (!seen.insert(form.bytes).second) continue;
          next.push_back(relabel(denser, form.relabeling));
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const Graph& x, const Graph& y) {
      return to_graph6(x) < to_graph6(y);
    });
    level = std::move(next);
  }
  return result;
}

// Reads a graph6 corpus: one graph per line, blank lines and '#' comment
// lines skipped. Parse errors carry the line number.
inline std::vector<Graph> load_graph6_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open corpus file '" + path + "'");
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const error& e) {
      throw error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

}  // namespace pcolor
