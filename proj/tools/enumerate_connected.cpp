// Writes every connected graph on 1..N vertices, one canonical graph6 line
// per isomorphism class, ordered by order then string.
//
//   enumerate_connected [N=8] > connected_upto8.g6

#include "domgraph/corpus.hpp"
#include "domgraph/io.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char **argv) {
  std::size_t max_order = 8;
  if (argc > 1)
    max_order = std::stoul(argv[1]);
  if (max_order == 0 || max_order > 10) {
    std::cerr << "order must be in [1,10]\n";
    return 2;
  }
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto graphs = domgraph::enumerate_connected(n);
    std::cerr << "n=" << n << ": " << graphs.size() << " connected graphs\n";
    for (const auto &g : graphs)
      std::cout << domgraph::to_graph6(g) << '\n';
  }
  return EXIT_SUCCESS;
}
