#pragma once

// Small simple undirected graphs with dense integer vertex ids 0..order-1.
// Values are cheap to copy and immutable by convention once built: every
// operation below returns a new graph instead of mutating in place.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcolor {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // kept normalized with first < second

// Domain error for every contract violation (bad input, out-of-range order,
// malformed serialization, illegal family parameters, ...). The CLI maps it
// to exit status 2.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Edge make_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : order_(order), adj_(checked_order(order)) {}

  Graph(int order, std::initializer_list<Edge> edges) : Graph(order) {
    for (const Edge& e : edges) add_edge(e.first, e.second);
  }

  static Graph from_edges(int order, const std::vector<Edge>& edges) {
    Graph g(order);
    for (const Edge& e : edges) g.add_edge(e.first, e.second);
    return g;
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= order_ || v >= order_ || u == v) return false;
    const auto& nu = adj_[static_cast<size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
  }

  // Builder-style mutation; used while constructing a value, never after.
  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw error("self-loop " + std::to_string(u));
    if (u < 0 || v < 0 || u >= order_ || v >= order_)
      throw error("edge endpoint out of range: " + std::to_string(u) + " " +
                  std::to_string(v));
    if (has_edge(u, v))
      throw error("duplicate edge " + std::to_string(u) + " " +
                  std::to_string(v));
    insert_sorted(adj_[static_cast<size_t>(u)], v);
    insert_sorted(adj_[static_cast<size_t>(v)], u);
    Edge e = make_edge(u, v);
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
  }

  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  int degree(Vertex v) const {
    return static_cast<int>(neighbors(v).size());
  }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order_; ++v)
      d = std::max(d, static_cast<int>(adj_[static_cast<size_t>(v)].size()));
    return d;
  }

  // Optional decorative vertex names (the tests and DOT output use them);
  // ignored by equality.
  void set_label(Vertex v, std::string name) {
    check_vertex(v);
    labels_[v] = std::move(name);
  }

  std::string label(Vertex v) const {
    check_vertex(v);
    auto it = labels_.find(v);
    return it == labels_.end() ? std::to_string(v) : it->second;
  }

  bool has_labels() const { return !labels_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order_)
      throw error("vertex " + std::to_string(v) + " out of range for order " +
                  std::to_string(order_));
  }

 private:
  static size_t checked_order(int order) {
    if (order < 0) throw error("graph order must be nonnegative");
    return static_cast<size_t>(order);
  }

  static void insert_sorted(std::vector<Vertex>& vec, Vertex v) {
    vec.insert(std::upper_bound(vec.begin(), vec.end(), v), v);
  }

  int order_ = 0;
  std::vector<Edge> edges_;             // sorted
  std::vector<std::vector<Vertex>> adj_;  // each sorted
  std::map<Vertex, std::string> labels_;
};

// ---------------------------------------------------------------------------
// Parsing: edge-list text. Lines "u v"; an optional first line "n <order>"
// fixes the order, otherwise it is 1 + the largest id. Lines starting with
// '#' and blank lines are skipped. Loops, duplicates, and non-integer tokens
// are rejected.
inline Graph parse_edge_list(const std::string& text) {
  std::optional<int> declared_order;
  std::vector<Edge> edges;
  Vertex max_id = -1;
  std::istringstream in(text);
  std::string line;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, b, rest;
    if (!(ls >> a)) continue;     // blank
    if (a[0] == '#') continue;    // comment
    if (!(ls >> b) || (ls >> rest))
      throw error("edge-list line needs exactly two tokens: '" + line + "'");
    if (first_content_line && a == "n") {
      first_content_line = false;
      try {
        std::size_t pos = 0;
        declared_order = std::stoi(b, &pos);
        if (pos != b.size()) throw std::invalid_argument(b);
      } catch (const std::exception&) {
        throw error("bad order token: '" + b + "'");
      }
      if (*declared_order < 0) throw error("negative order");
      continue;
    }
    first_content_line = false;
    auto parse_id = [&line](const std::string& tok) -> Vertex {
      try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
      } catch (const std::exception&) {
        throw error("non-integer vertex token '" + tok + "' in line '" + line +
                    "'");
      }
    };
    Vertex u = parse_id(a), v = parse_id(b);
    if (u == v) throw error("loop edge " + a + " " + b);
    edges.push_back(make_edge(u, v));
    max_id = std::max(max_id, std::max(u, v));
  }
  int order = declared_order.value_or(max_id + 1);
  if (max_id >= order)
    throw error("edge endpoint " + std::to_string(max_id) +
                " exceeds declared order " + std::to_string(order));
  Graph g(order);
  for (const Edge& e : edges) g.add_edge(e.first, e.second);  // rejects dups
  return g;
}

// ---------------------------------------------------------------------------
// Deletions. Vertex deletion compacts the ids above v down by one.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  Graph h(g.order() - 1);
  auto shift = [v](Vertex w) { return w > v ? w - 1 : w; };
  for (const Edge& e : g.edges())
    if (e.first != v && e.second != v)
      h.add_edge(shift(e.first), shift(e.second));
  if (g.has_labels())
    for (Vertex w = 0; w < g.order(); ++w)
      if (w != v) h.set_label(shift(w), g.label(w));
  return h;
}

inline Graph delete_edge(const Graph& g, Edge e) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw error("edge " + std::to_string(e.first) + " " +
                std::to_string(e.second) + " not present");
  Graph h(g.order());
  for (const Edge& f : g.edges())
    if (f != e) h.add_edge(f.first, f.second);
  if (g.has_labels())
    for (Vertex w = 0; w < g.order(); ++w) h.set_label(w, g.label(w));
  return h;
}

inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw error("duplicate vertex in induced_subgraph selection");
  std::map<Vertex, Vertex> to_new;
  for (size_t i = 0; i < sorted.size(); ++i) {
    g.check_vertex(sorted[i]);
    to_new[sorted[i]] = static_cast<Vertex>(i);
  }
  Graph h(static_cast<int>(sorted.size()));
  for (const Edge& e : g.edges()) {
    auto a = to_new.find(e.first), b = to_new.find(e.second);
    if (a != to_new.end() && b != to_new.end()) h.add_edge(a->second, b->second);
  }
  return h;
}

// Applies permutation pi (vertex v of g becomes pi[v]); used by tests and the
// canonicalizer.
inline Graph relabel(const Graph& g, const std::vector<Vertex>& pi) {
  if (static_cast<int>(pi.size()) != g.order())
    throw error("permutation size mismatch");
  Graph h(g.order());
  for (const Edge& e : g.edges())
    h.add_edge(pi[static_cast<size_t>(e.first)],
               pi[static_cast<size_t>(e.second)]);
  return h;
}

// ---------------------------------------------------------------------------
// Connectivity helpers.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<Vertex> comp, stack{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

// A star K_{1,m} (m >= 1): one center adjacent to all other vertices, no other
// edges. K2 = K_{1,1} counts.
inline bool is_star(const Graph& g) {
  return g.order() >= 2 && g.size() == g.order() - 1 &&
         g.max_degree() == g.order() - 1;
}

inline bool in_triangle(const Graph& g, Vertex v) {
  const auto& nb = g.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (g.has_edge(nb[i], nb[j])) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Stock graphs.
inline Graph make_path(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw error("cycle needs order >= 3");
  Graph g = make_path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph make_complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph make_star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.first, e.second);
  for (const Edge& e : b.edges())
    g.add_edge(e.first + a.order(), e.second + a.order());
  return g;
}

// ---------------------------------------------------------------------------
// DOT emission (render subcommand and documentation diagrams). The optional
// color map paints vertices by coloring class.
inline std::string to_dot(const Graph& g,
                          const std::map<Vertex, int>* colors = nullptr) {
  static const char* kPalette[] = {"white",     "lightblue", "palegreen",
                                   "lightsalmon", "plum",      "khaki",
                                   "lightgray", "orange"};
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  v" << v << " [label=\"" << g.label(v) << "\"";
    if (colors) {
      auto it = colors->find(v);
      if (it != colors->end()) {
        out << ", style=filled, fillcolor=\""
            << kPalette[static_cast<size_t>(it->second) % 8]
            << "\", xlabel=\"" << it->second << "\"";
      }
    }
    out << "];\n";
  }
  for (const Edge& e : g.edges())
    out << "  v" << e.first << " -- v" << e.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pcolor
