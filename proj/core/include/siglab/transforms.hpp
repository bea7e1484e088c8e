#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "siglab/graph.hpp"

namespace siglab {

Graph line_graph(const Graph& g);
Graph power(const Graph& g, std::size_t k);
Graph subdivision(const Graph& g);
// Vertices: V(g) first, then E(g) in the order subdivision() uses.
Graph total_graph(const Graph& g);

/// Cycle C_t with pendants[i] pendant edges hung on cycle vertex i.
struct SunSpec {
  std::size_t t = 3;
  std::vector<std::size_t> pendants;

  friend bool operator==(const SunSpec&, const SunSpec&) = default;
};

void validate(const SunSpec& spec);
// Cycle vertices 0..t-1 first, then pendants grouped by anchor.
Graph sun(const SunSpec& spec);

/// Four consecutive degree-2 vertices with their outer neighbors.
struct ContractionSite {
  std::array<Vertex, 4> inner{};
  Vertex u = 0;  // adjacent to inner[0]
  Vertex w = 0;  // adjacent to inner[3]

  friend bool operator==(const ContractionSite&, const ContractionSite&) = default;
};

// Admissible sites only (u != w and u, w non-adjacent), one orientation per
// path (inner[0] < inner[3]), sorted by inner tuple.
std::vector<ContractionSite> find_contraction_sites(const Graph& g);

// Replace the inner path by the edge uw. Throws InvalidArgument on a site that
// is malformed or inadmissible for g.
Graph contract_path4(const Graph& g, const ContractionSite& site);

struct Reduction {
  Graph graph;
  std::size_t steps = 0;
};

// Contract the first admissible site until none is left.
Reduction reduce_fully(const Graph& g);

}  // namespace siglab
