#pragma once

#include <optional>
#include <vector>

#include "siglab/harness.hpp"
#include "siglab/inertia.hpp"

namespace siglab::detail {

CheckReport make_report(CheckId id, const Graph& g, Verdict verdict);
std::vector<std::int64_t> as_ints(const VertexSet& vs);
void put_inertia(Witness& w, const std::string& prefix, const Inertia& in);

// Components of the subgraph induced by within.
std::vector<VertexMask> components_within(const Graph& g, VertexMask within);

// Reports restricted to `only` when set.
std::vector<CheckReport> cut_vertex_reports(const Graph& g, std::uint64_t budget,
                                            std::optional<CheckId> only);
std::vector<CheckReport> deletion_reports(const Graph& g, std::size_t induced_subset_limit,
                                          std::optional<CheckId> only);

}  // namespace siglab::detail
