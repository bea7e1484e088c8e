// Emits every graph (or every connected graph) on n vertices as graph6, one
// per isomorphism class, like `geng [-c] n`.

#include <iostream>

#include <CLI11.hpp>

#include "conngen.hpp"
#include "siglab/error.hpp"
#include "siglab/graph6.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Isomorph-free small graph generator (graph6 output)"};
  std::size_t n = 0;
  bool connected = false;
  app.add_option("n", n, "number of vertices")->required();
  app.add_flag("-c,--connected", connected, "connected graphs only");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto graphs = connected ? siglab::conngen::connected_graphs(n) : siglab::conngen::all_graphs(n);
    for (const auto& g : graphs) std::cout << siglab::to_graph6(g) << '\n';
    std::cerr << ">Z " << graphs.size() << " graphs generated\n";
  } catch (const siglab::Error& e) {
    std::cerr << "siglab-geng: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
