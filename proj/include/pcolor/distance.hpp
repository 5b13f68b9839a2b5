#pragma once

// All-pairs hop distances by repeated BFS. Disconnected pairs get kInfinity,
// a sentinel no arithmetic may touch.

#include <limits>
#include <queue>
#include <vector>

#include "pcolor/graph.hpp"

namespace pcolor {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int order)
      : order_(order),
        dist_(static_cast<size_t>(order) * static_cast<size_t>(order),
              kInfinity) {}

  int order() const { return order_; }

  int operator()(Vertex u, Vertex v) const {
    return dist_[static_cast<size_t>(u) * static_cast<size_t>(order_) +
                 static_cast<size_t>(v)];
  }

  void set(Vertex u, Vertex v, int d) {
    dist_[static_cast<size_t>(u) * static_cast<size_t>(order_) +
          static_cast<size_t>(v)] = d;
  }

 private:
  int order_ = 0;
  std::vector<int> dist_;
};

inline void bfs_from(const Graph& g, Vertex src, std::vector<int>& dist) {
  dist.assign(static_cast<size_t>(g.order()), kInfinity);
  std::queue<Vertex> q;
  dist[static_cast<size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[static_cast<size_t>(w)] == kInfinity) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push(w);
      }
  }
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  std::vector<int> row;
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs_from(g, s, row);
    for (Vertex t = 0; t < g.order(); ++t) m.set(s, t, row[static_cast<size_t>(t)]);
  }
  return m;
}

}  // namespace pcolor
