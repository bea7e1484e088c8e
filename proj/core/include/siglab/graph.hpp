#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace siglab {

using Vertex = std::uint32_t;
// Bit v set <=> vertex v is a member. Orders are capped at kMaxOrder so one
// word covers every vertex set.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxOrder = 64;

// Unordered vertex pair, stored normalized as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<Edge>;

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

VertexMask to_mask(std::span<const Vertex> vertices);
VertexSet to_set(VertexMask mask);

/// Labeled simple undirected graph on vertices 0..order-1.
///
/// Immutable once built; every transformation returns a new value. Labels are
/// optional provenance tags (a line-graph vertex remembers its source edge,
/// for instance) and never influence spectral or structural results.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  static Graph from_edges(std::size_t order, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});
  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // rows[v] is the neighbor mask of v; must be symmetric with empty diagonal.
  static Graph from_masks(std::vector<VertexMask> rows, std::vector<std::string> labels = {});

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return rows_.empty(); }

  bool adjacent(Vertex a, Vertex b) const { return (rows_.at(a) >> b) & 1U; }
  VertexMask neighbors(Vertex v) const { return rows_.at(v); }
  std::size_t degree(Vertex v) const { return std::popcount(rows_.at(v)); }
  std::span<const VertexMask> rows() const { return rows_; }
  VertexMask vertex_mask() const;

  std::vector<std::size_t> degrees() const;
  // Lexicographic (u < v) order.
  EdgeSet edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string_view label(Vertex v) const;

  // Structural equality: same order, same adjacency. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexMask> rows_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

// Structural equality plus identical labels.
bool identical(const Graph& a, const Graph& b);

/// Result of removing or selecting vertices: the re-indexed graph together
/// with the maps that let callers follow "the same vertex" across both.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> new_to_old;
  std::vector<std::optional<Vertex>> old_to_new;
};

Subgraph induced(const Graph& g, VertexMask keep);
Subgraph induced(const Graph& g, std::span<const Vertex> keep);
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);
Graph disjoint_union(const Graph& a, const Graph& b);

// Small named graphs used by tests, families, and representatives.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace siglab
