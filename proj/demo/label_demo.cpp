// Labels a small chordal, claw-free, narrow graph and shows the layer
// structure of the resulting closed labeling.

#include <iostream>

#include "closedgraph/closedgraph.hpp"

using namespace closedgraph;

int main() {
  // A strip of triangles: a-b-c-d-e with chords a-c, b-d, c-e.
  const Graph g = parse_edge_list(
      "a b\nb c\nc d\nd e\n"
      "a c\nb d\nc e\n");

  std::cout << std::boolalpha << "chordal: " << is_chordal(g).holds() << '\n'
            << "claw-free: " << is_claw_free(g).holds() << '\n'
            << "narrow: " << is_narrow(g).holds() << '\n';

  const LabelingRun run = algorithm1_label(g);
  for (int i = 1; i <= run.labeling.size(); ++i)
    std::cout << i << " -> " << g.name(run.labeling.vertex(i)) << "  l(" << i << ") = " << run.l(i) << '\n';

  std::cout << "closed: " << is_closed_by_definition(g, run.labeling).holds() << '\n';

  const LayerDecomposition dec = layers(g, run.labeling);
  for (std::size_t n = 0; n < dec.layers.size(); ++n) {
    std::cout << "L" << n << ":";
    for (Vertex v : dec.layers[n]) std::cout << ' ' << g.name(v);
    std::cout << '\n';
  }
  return 0;
}
