#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "siglab/graph.hpp"

namespace siglab {

std::vector<VertexSet> components(const Graph& g);
std::vector<VertexMask> component_masks(const Graph& g);
// Articulation points, ascending.
VertexSet cut_vertices(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// Unweighted BFS distances from source; nullopt for unreachable vertices.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

struct StructureSummary {
  std::size_t component_count = 0;
  VertexSet cut_vertices;
  // Non-increasing.
  std::vector<std::size_t> degree_sequence;
  // Edges with at least one endpoint of degree > 2.
  std::size_t theta = 0;
  // |E| - |V| + 1 of each component, in component order.
  std::vector<std::int64_t> component_dimensions;
  // Set only for connected graphs.
  std::optional<std::int64_t> dimension;
};

StructureSummary structure(const Graph& g);

// Number of edges leaving the chordless cycle spanned by cycle_vertices.
// Throws InvalidArgument if those vertices do not induce a cycle.
std::size_t cycle_type(const Graph& g, std::span<const Vertex> cycle_vertices);

}  // namespace siglab
