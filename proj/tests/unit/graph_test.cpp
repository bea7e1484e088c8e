#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "conngen.hpp"
#include "oracles.hpp"
#include "siglab/error.hpp"
#include "siglab/graph.hpp"
#include "siglab/graph6.hpp"
#include "siglab/structure.hpp"

namespace siglab {
namespace {

TEST(Graph, EdgesAreNormalizedAndSorted) {
  const Graph g = Graph::from_edges(4, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 3U);
  const EdgeSet expected{{0, 1}, {0, 2}, {1, 3}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(kMaxOrder + 1), SizeLimitError);
  EXPECT_THROW(Graph::from_masks({0b10, 0b00}), InvalidArgument);
}

TEST(Graph, LabelsDoNotAffectEquality) {
  const EdgeSet e{{0, 1}};
  const Graph a = Graph::from_edges(2, e, {"x", "y"});
  const Graph b = Graph::from_edges(2, e);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(identical(a, b));
  EXPECT_EQ(a.label(1), "y");
}

TEST(Graph, DeleteVerticesKeepsMaps) {
  const Graph p = path_graph(5);
  const Vertex gone[] = {2};
  const Subgraph s = delete_vertices(p, gone);
  EXPECT_EQ(s.graph.order(), 4U);
  EXPECT_EQ(s.graph.edge_count(), 2U);
  EXPECT_EQ(s.new_to_old, (std::vector<Vertex>{0, 1, 3, 4}));
  EXPECT_FALSE(s.old_to_new[2].has_value());
  EXPECT_EQ(*s.old_to_new[3], 2U);
}

TEST(Graph, InducedMatchesDeletion) {
  for (const Graph& g : conngen::all_graphs(6)) {
    for (VertexMask keep = 0; keep < 64; keep += 7) {
      const Subgraph a = induced(g, keep);
      VertexSet removed;
      for (Vertex v = 0; v < 6; ++v)
        if (!((keep >> v) & 1U)) removed.push_back(v);
      const Subgraph b = delete_vertices(g, removed);
      ASSERT_EQ(a.graph, b.graph);
      ASSERT_EQ(a.new_to_old, b.new_to_old);
    }
  }
}

TEST(Graph, EdgeEditsAndUnion) {
  const Graph c = cycle_graph(5);
  const Graph p = delete_edge(c, {0, 4});
  EXPECT_EQ(p, path_graph(5));
  EXPECT_EQ(add_edge(p, {4, 0}), c);
  EXPECT_THROW(delete_edge(p, {0, 4}), InvalidArgument);
  EXPECT_THROW(add_edge(c, {0, 1}), InvalidArgument);
  const Graph u = disjoint_union(complete_graph(3), path_graph(2));
  EXPECT_EQ(u.order(), 5U);
  EXPECT_TRUE(u.adjacent(3, 4));
  EXPECT_EQ(u.edge_count(), 4U);
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(from_graph6("A_"), path_graph(2));
  EXPECT_EQ(from_graph6("D??"), Graph(5));
  EXPECT_EQ(from_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(from_graph6("Bg"), path_graph(3));
  EXPECT_EQ(from_graph6(">>graph6<<A_"), path_graph(2));
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
}

TEST(Graph6, RoundTripAllGraphsUpToEight) {
  std::size_t total = 0;
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const Graph& g : conngen::all_graphs(n)) {
      const std::string text = to_graph6(g);
      ASSERT_EQ(from_graph6(text), g) << text;
      ++total;
    }
  }
  EXPECT_EQ(total, 1U + 1 + 2 + 4 + 11 + 34 + 156 + 1044 + 12346);
}

TEST(Graph6, RoundTripRandomLabeledGraphsNineAndTen) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {9U, 10U}) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (int round = 0; round < 20000; ++round) {
      const std::uint64_t bits = rng() & ((std::uint64_t{1} << pairs) - 1);
      EdgeSet edges;
      std::size_t i = 0;
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b, ++i)
          if ((bits >> i) & 1U) edges.emplace_back(a, b);
      const Graph g = Graph::from_edges(n, edges);
      ASSERT_EQ(from_graph6(to_graph6(g)), g) << to_graph6(g);
    }
  }
}

TEST(Graph6, RoundTripLongForm) {
  for (std::size_t n : {62U, 63U, 64U}) {
    const Graph c = cycle_graph(n);
    const std::string text = to_graph6(c);
    EXPECT_EQ(text[0] == '~', n >= 63);
    EXPECT_EQ(from_graph6(text), c);
  }
}

std::size_t parse_offset(std::string_view text, std::size_t max_order = kMaxOrder) {
  try {
    from_graph6(text, max_order);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "accepted " << text;
  return 0;
}

TEST(Graph6, ErrorsCarryOffsets) {
  EXPECT_EQ(parse_offset(""), 0U);
  EXPECT_EQ(parse_offset("A"), 1U);        // truncated
  EXPECT_EQ(parse_offset("A_?"), 2U);      // trailing byte
  EXPECT_EQ(parse_offset("A!"), 1U);       // outside 63..126
  EXPECT_EQ(parse_offset("A`"), 1U);       // padding bit set
  EXPECT_EQ(parse_offset("~~??????"), 0U); // eight-byte sizes not supported
  EXPECT_EQ(parse_offset("D??", 4), 0U);   // over the caller's cap
  EXPECT_THROW(from_graph6("~??~"), ParseError);  // long form with n < 63
}

TEST(Structure, CutVerticesMatchDeletionOracle) {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : conngen::all_graphs(n)) ASSERT_EQ(cut_vertices(g), oracle::brute_cut_vertices(g)) << to_graph6(g);
}

TEST(Structure, ComponentsPartitionVertices) {
  for (const Graph& g : conngen::all_graphs(6)) {
    const auto masks = component_masks(g);
    VertexMask seen = 0;
    for (VertexMask m : masks) {
      ASSERT_EQ(seen & m, 0U);
      seen |= m;
      ASSERT_TRUE(is_connected(induced(g, m).graph));
    }
    ASSERT_EQ(seen, g.vertex_mask());
    ASSERT_EQ(masks.size(), components(g).size());
  }
}

TEST(Structure, Predicates) {
  EXPECT_TRUE(is_tree(star_graph(4)));
  EXPECT_FALSE(is_tree(cycle_graph(4)));
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(cycle_graph(7)));
  EXPECT_TRUE(has_isolated_vertex(disjoint_union(path_graph(2), Graph(1))));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(2)));
  const auto d = distances_from(disjoint_union(path_graph(4), Graph(1)), 0);
  EXPECT_EQ(*d[3], 3U);
  EXPECT_FALSE(d[4].has_value());
}

TEST(Structure, Summary) {
  // Bowtie: two triangles sharing vertex 2.
  const Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const StructureSummary s = structure(bowtie);
  EXPECT_EQ(s.component_count, 1U);
  EXPECT_EQ(s.cut_vertices, (VertexSet{2}));
  EXPECT_EQ(s.degree_sequence, (std::vector<std::size_t>{4, 2, 2, 2, 2}));
  EXPECT_EQ(s.theta, 4U);
  EXPECT_EQ(s.dimension, 2);

  const StructureSummary t = structure(disjoint_union(cycle_graph(3), path_graph(3)));
  EXPECT_FALSE(t.dimension.has_value());
  EXPECT_EQ(t.component_dimensions, (std::vector<std::int64_t>{1, 0}));
}

TEST(Structure, CycleType) {
  const Graph bowtie = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const Vertex left[] = {0, 1, 2};
  EXPECT_EQ(cycle_type(bowtie, left), 2U);
  const Vertex chord[] = {0, 1, 2, 3};
  EXPECT_THROW(cycle_type(complete_graph(4), chord), InvalidArgument);
  const Vertex open[] = {0, 1, 2};
  EXPECT_THROW(cycle_type(path_graph(3), open), InvalidArgument);
}

}  // namespace
}  // namespace siglab
