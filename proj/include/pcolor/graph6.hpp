#pragma once

// graph6 text encoding (McKay): order byte 63+n for n <= 62, then the upper
// triangle of the adjacency matrix in column-major order ((0,1), (0,2), (1,2),
// (0,3), ...) packed into 6-bit groups, each +63, zero-padded. Parsing is
// strict: wrong length, characters outside 63..126, multi-byte order headers
// ('~'), and nonzero padding bits are all rejected.

#include <string>

#include "pcolor/graph.hpp"

namespace pcolor {

namespace detail {
inline int g6_payload_bytes(int n) {
  int bits = n * (n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw error("graph6 supports order <= 62, got " + std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  auto flush_bit = [&](int bit) {
    acc = (acc << 1) | bit;
    if (++nbits == 6) {
      out.push_back(static_cast<char>(63 + acc));
      acc = 0;
      nbits = 0;
    }
  };
  for (Vertex col = 1; col < n; ++col)
    for (Vertex row = 0; row < col; ++row) flush_bit(g.has_edge(row, col) ? 1 : 0);
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw error("empty graph6 string");
  for (char c : line)
    if (c < 63 || c > 126)
      throw error("graph6 byte out of range in '" + line + "'");
  if (line[0] == '~')
    throw error("multi-byte graph6 order header unsupported (order > 62)");
  int n = line[0] - 63;
  int payload = detail::g6_payload_bytes(n);
  if (static_cast<int>(line.size()) != 1 + payload)
    throw error("graph6 '" + line + "': expected " + std::to_string(1 + payload) +
                " bytes for order " + std::to_string(n) + ", got " +
                std::to_string(line.size()));
  Graph g(n);
  int bit_index = 0;
  Vertex row = 0, col = 1;
  int total_bits = n * (n - 1) / 2;
  for (int i = 0; i < payload; ++i) {
    int group = line[static_cast<size_t>(1 + i)] - 63;
    for (int b = 5; b >= 0; --b, ++bit_index) {
      int bit = (group >> b) & 1;
      if (bit_index < total_bits) {
        if (bit) g.add_edge(row, col);
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (bit) {
        throw error("graph6 '" + line + "': nonzero padding bit");
      }
    }
  }
  return g;
}

}  // namespace pcolor
