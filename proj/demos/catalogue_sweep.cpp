// Walks the catalogue of 4-chi_rho-critical graphs up to order 10 and
// re-derives each one's criticality from scratch with the exact solver.

#include <iostream>

#include "pcolor/pcolor.hpp"

int main() {
  using namespace pcolor;
  for (const auto& [id, g] : list_members(Universe::critical, 10)) {
    CriticalityReport r = analyze_criticality(g);
    std::cout << id.to_string() << "  n=" << g.order() << "  " << to_graph6(g)
              << "  chi=" << r.chi
              << "  critical=" << (r.subgraph_critical ? "yes" : "NO") << "\n";
  }
  return 0;
}
