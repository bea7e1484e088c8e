#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "siglab/graph.hpp"

namespace siglab {

// Decode one graph6 line (no trailing newline). Accepts the 1-byte and the
// 4-byte ('~' + 3) size prefixes and an optional ">>graph6<<" header; rejects
// orders above max_order. Throws ParseError naming the offending byte.
Graph from_graph6(std::string_view text, std::size_t max_order = kMaxOrder);

std::string to_graph6(const Graph& g);

}  // namespace siglab
