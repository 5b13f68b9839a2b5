// Computes the packing chromatic number of a hand-built graph and prints the
// witness coloring: the Petersen graph here.

#include <iostream>

#include "pcolor/pcolor.hpp"

int main() {
  using namespace pcolor;
  Graph g(10);
  // outer C5, inner 5-star polygon, spokes
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  ChiRhoResult r = chi_rho(g);
  std::cout << "chi_rho(Petersen) = " << r.value << "\n";
  std::cout << "witness coloring (vertex color):\n" << r.witness.to_text();
  std::cout << "valid: " << (is_valid(g, r.witness) ? "yes" : "no") << "\n";
  return 0;
}
