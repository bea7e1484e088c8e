#include <gtest/gtest.h>

#include "conngen.hpp"
#include "oracles.hpp"
#include "siglab/error.hpp"
#include "siglab/graph6.hpp"
#include "siglab/structure.hpp"
#include "siglab/transforms.hpp"

namespace siglab {
namespace {

TEST(LineGraph, SmallCases) {
  EXPECT_EQ(line_graph(star_graph(3)), complete_graph(3));
  EXPECT_EQ(line_graph(path_graph(4)), path_graph(3));
  const Graph l6 = line_graph(cycle_graph(6));
  EXPECT_EQ(l6.order(), 6U);
  EXPECT_TRUE(is_connected(l6));
  for (std::size_t d : l6.degrees()) EXPECT_EQ(d, 2U);
  EXPECT_EQ(line_graph(Graph(3)).order(), 0U);
  const Graph l = line_graph(path_graph(3));
  EXPECT_EQ(l.label(0), "{0,1}");
  EXPECT_EQ(l.label(1), "{1,2}");
}

TEST(LineGraph, EdgeCountIsSumOfDegreePairs) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : conngen::connected_graphs(n)) {
      if (g.edge_count() > kMaxOrder) continue;
      std::size_t expected = 0;
      for (std::size_t d : g.degrees()) expected += d * (d - 1) / 2;
      const Graph l = line_graph(g);
      ASSERT_EQ(l.order(), g.edge_count());
      ASSERT_EQ(l.edge_count(), expected) << to_graph6(g);
    }
  }
}

TEST(Power, MatchesDistanceOracle) {
  for (const Graph& g : conngen::all_graphs(6))
    for (std::size_t k = 1; k <= 4; ++k) ASSERT_EQ(power(g, k), oracle::floyd_power(g, k)) << to_graph6(g) << " k=" << k;
}

TEST(Power, Monotone) {
  const Graph p = path_graph(9);
  for (std::size_t k = 1; k < 9; ++k) {
    const Graph a = power(p, k);
    const Graph b = power(p, k + 1);
    for (const Edge& e : a.edges()) ASSERT_TRUE(b.adjacent(e.u, e.v));
  }
  EXPECT_EQ(power(p, 8), complete_graph(9));
  EXPECT_EQ(power(p, 1), p);
  EXPECT_THROW(power(p, 0), InvalidArgument);
}

TEST(Subdivision, IsBipartiteWithDoubledEdges) {
  for (const Graph& g : conngen::connected_graphs(6)) {
    const Graph s = subdivision(g);
    ASSERT_EQ(s.order(), g.order() + g.edge_count());
    ASSERT_EQ(s.edge_count(), 2 * g.edge_count());
    ASSERT_TRUE(is_bipartite(s));
  }
  // S(C4) is an 8-cycle, with the original vertices first.
  const Graph s = subdivision(cycle_graph(4));
  EXPECT_EQ(s.order(), 8U);
  EXPECT_TRUE(is_connected(s));
  for (std::size_t d : s.degrees()) EXPECT_EQ(d, 2U);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 4; ++b) EXPECT_FALSE(s.adjacent(a, b));
}

TEST(TotalGraph, EqualsSquareOfSubdivision) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : conngen::all_graphs(n)) {
      if (g.order() + g.edge_count() > kMaxOrder) continue;
      ASSERT_TRUE(identical(total_graph(g), power(subdivision(g), 2))) << to_graph6(g);
    }
  }
  // T(K2) is a triangle.
  EXPECT_EQ(total_graph(path_graph(2)), complete_graph(3));
}

TEST(Sun, Layout) {
  const Graph g = sun({4, {2, 0, 1, 0}});
  EXPECT_EQ(g.order(), 7U);
  EXPECT_EQ(g.edge_count(), 7U);
  EXPECT_TRUE(g.adjacent(0, 4));
  EXPECT_TRUE(g.adjacent(0, 5));
  EXPECT_TRUE(g.adjacent(2, 6));
  EXPECT_EQ(g.degree(6), 1U);
  EXPECT_THROW(sun({2, {0, 0}}), InvalidArgument);
  EXPECT_THROW(sun({3, {0, 0}}), InvalidArgument);
}

TEST(Contraction, SiteCounts) {
  EXPECT_EQ(find_contraction_sites(cycle_graph(8)).size(), 8U);
  EXPECT_EQ(find_contraction_sites(path_graph(6)).size(), 1U);
  EXPECT_EQ(find_contraction_sites(complete_graph(4)).size(), 0U);
  // C5: u and w coincide. C6: u and w adjacent.
  EXPECT_EQ(find_contraction_sites(cycle_graph(5)).size(), 0U);
  EXPECT_EQ(find_contraction_sites(cycle_graph(6)).size(), 0U);
  EXPECT_EQ(find_contraction_sites(cycle_graph(7)).size(), 7U);
}

TEST(Contraction, PathSiteShape) {
  const auto sites = find_contraction_sites(path_graph(6));
  ASSERT_EQ(sites.size(), 1U);
  EXPECT_EQ(sites[0].inner, (std::array<Vertex, 4>{1, 2, 3, 4}));
  EXPECT_EQ(sites[0].u, 0U);
  EXPECT_EQ(sites[0].w, 5U);
  EXPECT_EQ(contract_path4(path_graph(6), sites[0]), path_graph(2));
}

TEST(Contraction, RemovesFourVerticesAndThreeEdges) {
  const Graph c = cycle_graph(12);
  for (const auto& site : find_contraction_sites(c)) {
    const Graph h = contract_path4(c, site);
    ASSERT_EQ(h.order(), 8U);
    ASSERT_EQ(h.edge_count(), 8U);
    ASSERT_TRUE(is_connected(h));
  }
}

TEST(Contraction, RejectsBadSites) {
  ContractionSite bad{{0, 1, 2, 3}, 5, 4};
  EXPECT_THROW(contract_path4(path_graph(6), bad), InvalidArgument);
  ContractionSite close{{1, 2, 3, 4}, 0, 5};
  EXPECT_THROW(contract_path4(cycle_graph(6), close), InvalidArgument);
}

TEST(Contraction, ReduceFully) {
  const Reduction r = reduce_fully(cycle_graph(16));
  EXPECT_EQ(r.steps, 3U);
  EXPECT_EQ(r.graph, cycle_graph(4));
  EXPECT_EQ(reduce_fully(cycle_graph(6)).steps, 0U);
  EXPECT_TRUE(find_contraction_sites(reduce_fully(path_graph(20)).graph).empty());
}

}  // namespace
}  // namespace siglab
