#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "siglab/graph.hpp"

namespace siglab {

inline constexpr std::uint64_t kDefaultCycleBudget = 10'000'000;

struct CycleCensus {
  std::map<std::size_t, std::uint64_t> by_length;
  std::uint64_t c3 = 0;  // lengths = 3 (mod 4)
  std::uint64_t c5 = 0;  // lengths = 1 (mod 4)
  std::uint64_t c1 = 0;  // odd cycles
  std::uint64_t total = 0;
  // When set, the counts are a truncated prefix and must not decide a check.
  bool budget_exceeded = false;
  // Set by census_until when both targets were met before the enumeration
  // finished; c3 and c5 are then lower bounds.
  bool stopped_at_target = false;
};

// Counts every simple cycle once. Stops as soon as more than budget cycles
// have been seen.
CycleCensus census(const Graph& g, std::uint64_t budget = kDefaultCycleBudget);

// Like census, but stops once c3 >= c3_target and c5 >= c5_target. Enough to
// decide inequalities of the form -c3 <= s <= c5 on graphs whose full cycle
// count is out of reach.
CycleCensus census_until(const Graph& g, std::uint64_t c3_target, std::uint64_t c5_target,
                         std::uint64_t budget = kDefaultCycleBudget);

struct CycleTarget {
  enum class Kind { ExactLength, ResidueMod4 };
  Kind kind = Kind::ExactLength;
  std::size_t value = 3;

  static CycleTarget length(std::size_t l) { return {Kind::ExactLength, l}; }
  static CycleTarget residue(std::size_t r) { return {Kind::ResidueMod4, r % 4}; }
};

// For each target, whether some simple cycle through v realizes it. Stops
// once every target has a witness.
std::vector<bool> cycles_through_vertex(const Graph& g, Vertex v,
                                        std::span<const CycleTarget> targets);

}  // namespace siglab
