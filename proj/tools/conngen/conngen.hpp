#pragma once

// Isomorph-free generation of small graphs, standing in for nauty's geng
// where the toolchain does not ship it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "siglab/graph.hpp"

namespace siglab::conngen {

inline constexpr std::size_t kMaxCanonicalOrder = 11;

// Isomorphism invariant: equal codes <=> isomorphic graphs. Order must not
// exceed kMaxCanonicalOrder.
std::uint64_t canonical_code(const Graph& g);

// All graphs / connected graphs on n vertices, one per isomorphism class.
std::vector<Graph> all_graphs(std::size_t n);
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace siglab::conngen
