// Builds the 8-regular pair graph of S4 over A4 and prints its spectrum and
// Ramanujan verdict.

#include <cmath>
#include <iostream>

#include "pairgraph.hpp"

int main() {
  using namespace pairgraph;
  const FiniteGroup g = make_symmetric(4);
  const Subgroup h = builtin_subgroup(g, "alternating_in_symmetric");
  const ElementSet s =
      parse_element_list(g, "(1,2);(1,3);(2,4);(3,4);(1,2,3,4);(1,3,2,4);(1,4,2,3);(1,4,3,2)");
  const PairGraph graph = build_pair_graph(h, s);

  const Spectrum spectrum = compute_spectrum(graph);
  for (const auto& c : spectrum.clusters)
    std::cout << (std::abs(c.value) < spectrum.merge_gap() ? 0.0 : c.value) << " x" << c.multiplicity << "\n";

  const auto verdict = is_ramanujan(graph, spectrum);
  std::cout << "k = " << verdict.k << ", worst nontrivial = " << verdict.worst_nontrivial
            << ", bound = " << verdict.bound << ", Ramanujan: " << (verdict.ramanujan ? "yes" : "no") << "\n";
}
