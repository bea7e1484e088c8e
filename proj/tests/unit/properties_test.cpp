#include <gtest/gtest.h>

#include "conngen.hpp"
#include "oracles.hpp"
#include "siglab/census.hpp"
#include "siglab/enumerate.hpp"
#include "siglab/graph6.hpp"
#include "siglab/harness.hpp"
#include "siglab/inertia.hpp"
#include "siglab/report.hpp"
#include "siglab/structure.hpp"
#include "siglab/transforms.hpp"

namespace siglab {
namespace {

std::vector<Graph> all_up_to(std::size_t max_n, std::size_t min_n = 1) {
  std::vector<Graph> out;
  for (std::size_t n = min_n; n <= max_n; ++n)
    for (Graph& g : conngen::all_graphs(n)) out.push_back(std::move(g));
  return out;
}

std::size_t diameter(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    for (const auto& x : distances_from(g, v))
      if (x) d = std::max(d, *x);
  return d;
}

TEST(Properties, DeletionPreservesSurvivorAdjacency) {
  for (const Graph& g : conngen::all_graphs(6)) {
    for (VertexMask gone = 0; gone < 64; gone += 9) {
      const VertexSet removed = to_set(gone);
      const Subgraph s = delete_vertices(g, removed);
      ASSERT_EQ(s.graph.order(), g.order() - removed.size());
      for (Vertex a = 0; a < s.graph.order(); ++a)
        for (Vertex b = 0; b < s.graph.order(); ++b)
          ASSERT_EQ(s.graph.adjacent(a, b), g.adjacent(s.new_to_old[a], s.new_to_old[b]));
    }
  }
}

TEST(Properties, CutVerticesMatchOracleUpToEight) {
  for (const Graph& g : conngen::all_graphs(8)) ASSERT_EQ(cut_vertices(g), oracle::brute_cut_vertices(g)) << to_graph6(g);
}

TEST(Properties, DimensionLaws) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : conngen::connected_graphs(n)) {
      const StructureSummary s = structure(g);
      ASSERT_TRUE(s.dimension.has_value());
      ASSERT_GE(*s.dimension, 0);
      ASSERT_EQ(*s.dimension == 0, is_tree(g));
      ASSERT_LE(s.theta, g.edge_count());
    }
  }
  for (std::size_t n = 4; n <= 7; ++n) {
    for (const auto& family : {unicyclic_from_trees(n), bicyclic_from_unicyclic(n)}) {
      for (const Graph& g : family) {
        const std::int64_t dim = *structure(g).dimension;
        for (const Edge& e : g.edges()) {
          const Graph h = delete_edge(g, e);
          if (!is_connected(h)) continue;  // a bridge, not a cycle edge
          ASSERT_EQ(*structure(h).dimension, dim - 1);
        }
      }
    }
  }
}

TEST(Properties, LineGraphDegreeLaw) {
  for (const Graph& g : all_up_to(8, 2)) {
    if (g.edge_count() > kMaxOrder) continue;
    const Graph l = line_graph(g);
    const EdgeSet edges = g.edges();
    for (Vertex i = 0; i < l.order(); ++i)
      ASSERT_EQ(l.degree(i), g.degree(edges[i].u) + g.degree(edges[i].v) - 2) << to_graph6(g);
  }
}

TEST(Properties, PowerIsCompleteExactlyFromTheDiameter) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : conngen::connected_graphs(n)) {
      const std::size_t d = diameter(g);
      for (std::size_t k = 1; k <= n; ++k) ASSERT_EQ(power(g, k) == complete_graph(n), k >= d) << to_graph6(g) << " k=" << k;
    }
  }
}

TEST(Properties, TotalEqualsSquareOfSubdivisionUpToSeven) {
  for (const Graph& g : all_up_to(7)) ASSERT_TRUE(identical(total_graph(g), power(subdivision(g), 2))) << to_graph6(g);
}

TEST(Properties, PathContractionOnAllGraphsUpToEight) {
  for (const Graph& g : all_up_to(8, 6))
    for (const auto& r : check_path_contraction(g)) ASSERT_NE(r.verdict, Verdict::Fail) << to_json_line(r);
}

TEST(Properties, CharPolyShape) {
  for (const Graph& g : all_up_to(7)) {
    const CharPoly p = char_poly(g);
    const std::size_t n = g.order();
    ASSERT_EQ(p.degree(), n);
    ASSERT_EQ(p.coefficients[n], 1);
    if (n >= 1) ASSERT_EQ(p.coefficients[n - 1], 0);
    if (n >= 2) ASSERT_EQ(p.coefficients[n - 2], -static_cast<long>(g.edge_count()));
    if (is_bipartite(g))
      for (std::size_t i = 0; i <= n; ++i)
        if ((n - i) % 2 == 1) ASSERT_EQ(p.coefficients[i], 0) << to_graph6(g);
  }
}

TEST(Properties, InertiaParity) {
  for (const Graph& g : all_up_to(7)) {
    const Inertia in = inertia(g);
    ASSERT_EQ(in.order(), g.order());
    ASSERT_EQ(((in.signature() % 2) + 2) % 2, static_cast<long>((g.order() - in.nullity) % 2));
    if (in.rank() % 2 == 0) ASSERT_EQ(in.signature() % 2, 0);
  }
}

TEST(Properties, CensusMatchesOracleOnEightVertices) {
  for (const Graph& g : conngen::all_graphs(8)) ASSERT_EQ(census(g).by_length, oracle::subset_hamiltonian_census(g)) << to_graph6(g);
}

TEST(Properties, CensusShape) {
  for (const Graph& g : all_up_to(7)) {
    const CycleCensus c = census(g);
    ASSERT_EQ(c.c1, c.c3 + c.c5);
    for (const auto& [len, k] : c.by_length) {
      ASSERT_GE(len, 3U);
      ASSERT_LE(len, g.order());
      if (is_bipartite(g)) ASSERT_EQ(len % 2, 0U);
    }
    for (const Edge& e : g.edges()) {
      const CycleCensus d = census(delete_edge(g, e));
      ASSERT_LE(d.total, c.total);
      for (const auto& [len, k] : d.by_length) ASSERT_LE(k, c.by_length.at(len));
    }
  }
}

TEST(Properties, TreePowerVertexDeletionDropsOddCycles) {
  for (std::size_t n = 5; n <= 8; ++n) {
    for (const Graph& t : free_trees(n)) {
      for (std::size_t k : {2U, 3U}) {
        const Graph p = power(t, k);
        const CycleCensus whole = census(p);
        for (Vertex v = 0; v < n; ++v) {
          const Vertex gone[] = {v};
          const CycleCensus part = census(delete_vertices(p, gone).graph);
          ASSERT_LE(part.c3 + 1, whole.c3) << to_graph6(t) << " k=" << k << " v=" << v;
          ASSERT_LE(part.c5 + 1, whole.c5) << to_graph6(t) << " k=" << k << " v=" << v;
        }
      }
    }
  }
}

TEST(Properties, VertexDeletionInterlacingUpToNine) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& g : conngen::all_graphs(n)) {
      const Inertia whole = inertia(g);
      for (Vertex x = 0; x < n; ++x) {
        const Inertia part = induced_inertia(g, g.vertex_mask() & ~bit(x));
        ASSERT_LE(std::abs(whole.signature() - part.signature()), 1) << to_graph6(g);
        if (part.rank() == whole.rank() || part.rank() + 2 == whole.rank())
          ASSERT_EQ(part.signature(), whole.signature()) << to_graph6(g);
      }
    }
  }
}

TEST(Properties, FamiliesAreDeterministic) {
  EXPECT_EQ(free_trees(10), free_trees(10));
  EXPECT_EQ(unicyclic_from_trees(7), unicyclic_from_trees(7));
  EXPECT_EQ(sun_grid(5, 2), sun_grid(5, 2));
}

TEST(Properties, VerdictsReproduceFromWitnessGraph6) {
  std::vector<FamilyItem> items;
  for (const Graph& g : conngen::connected_graphs(6)) items.push_back({g, "", std::nullopt});
  for (CheckId id : {CheckId::Conjecture, CheckId::CutVertexRank, CheckId::LineGraph, CheckId::VertexDeletion}) {
    search_counterexamples(std::span<const FamilyItem>(items), id, CheckOptions{}, 1, [&](const CheckReport& r) {
      const FamilyItem again{from_graph6(r.graph6), "", std::nullopt};
      bool seen = false;
      for (const auto& s : run_check(id, again, CheckOptions{})) seen |= to_json_line(s) == to_json_line(r);
      ASSERT_TRUE(seen) << to_json_line(r);
    });
  }
}

TEST(Properties, BipartiteGraphsPassConjectureWithZeroSignature) {
  for (const Graph& g : all_up_to(7)) {
    if (!is_bipartite(g)) continue;
    const CheckReport r = check_conjecture(g);
    ASSERT_EQ(r.verdict, Verdict::Pass);
    ASSERT_EQ(std::get<std::int64_t>(*r.witness.find("s")), 0);
  }
}

TEST(Properties, SkippedNeverCountsAsPass) {
  const std::vector<FamilyItem> items{{complete_graph(9), "", std::nullopt}, {cycle_graph(5), "", std::nullopt}};
  CheckOptions options;
  options.budget = 50;
  const SearchResult r = search_counterexamples(std::span<const FamilyItem>(items), CheckId::Conjecture, options);
  EXPECT_EQ(r.summary.skipped, 1U);
  EXPECT_EQ(r.summary.pass, 1U);
}

}  // namespace
}  // namespace siglab
