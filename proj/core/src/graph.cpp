#include "siglab/graph.hpp"

#include <numeric>
#include <string>

#include "siglab/error.hpp"

namespace siglab {

VertexMask to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

VertexSet to_set(VertexMask mask) {
  VertexSet out;
  out.reserve(std::popcount(mask));
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

namespace {

void check_order(std::size_t order) {
  if (order > kMaxOrder) {
    throw SizeLimitError("graph order " + std::to_string(order) + " exceeds " +
                         std::to_string(kMaxOrder));
  }
}

void check_labels(std::size_t order, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != order) {
    throw InvalidArgument("label count does not match graph order");
  }
}

}  // namespace

Graph::Graph(std::size_t order) {
  check_order(order);
  rows_.assign(order, 0);
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  Graph g(order);
  check_labels(order, labels);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    if (e.v >= order) throw InvalidArgument("edge endpoint " + std::to_string(e.v) + " out of range");
    if (g.rows_[e.u] & bit(e.v))
      throw InvalidArgument("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    ++g.edge_count_;
    g.rows_[e.u] |= bit(e.v);
    g.rows_[e.v] |= bit(e.u);
  }
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::from_masks(std::vector<VertexMask> rows, std::vector<std::string> labels) {
  check_order(rows.size());
  check_labels(rows.size(), labels);
  const std::size_t n = rows.size();
  const VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (rows[v] & ~all) throw InvalidArgument("neighbor out of range at vertex " + std::to_string(v));
    if (rows[v] & bit(static_cast<Vertex>(v))) throw InvalidArgument("loop at vertex " + std::to_string(v));
    for (VertexMask m = rows[v]; m; m &= m - 1) {
      auto u = static_cast<Vertex>(std::countr_zero(m));
      if (!(rows[u] & bit(static_cast<Vertex>(v)))) throw InvalidArgument("asymmetric adjacency");
    }
    degree_sum += std::popcount(rows[v]);
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.labels_ = std::move(labels);
  g.edge_count_ = degree_sum / 2;
  return g;
}

VertexMask Graph::vertex_mask() const {
  const std::size_t n = order();
  return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  for (std::size_t v = 0; v < order(); ++v) d[v] = std::popcount(rows_[v]);
  return d;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < order(); ++u) {
    VertexMask higher = rows_[u] & ~((bit(static_cast<Vertex>(u)) << 1) - 1);
    for (; higher; higher &= higher - 1) {
      out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(std::countr_zero(higher)));
    }
  }
  return out;
}

std::string_view Graph::label(Vertex v) const {
  if (labels_.empty()) return {};
  return labels_.at(v);
}

bool identical(const Graph& a, const Graph& b) {
  if (!(a == b)) return false;
  for (std::size_t v = 0; v < a.order(); ++v) {
    if (a.label(static_cast<Vertex>(v)) != b.label(static_cast<Vertex>(v))) return false;
  }
  return true;
}

Subgraph induced(const Graph& g, VertexMask keep) {
  if (keep & ~g.vertex_mask()) throw InvalidArgument("vertex set references a missing vertex");
  Subgraph out;
  out.old_to_new.assign(g.order(), std::nullopt);
  out.new_to_old = to_set(keep);
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    out.old_to_new[out.new_to_old[i]] = static_cast<Vertex>(i);
  }
  std::vector<VertexMask> rows(out.new_to_old.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (VertexMask m = g.neighbors(out.new_to_old[i]) & keep; m; m &= m - 1) {
      rows[i] |= bit(*out.old_to_new[std::countr_zero(m)]);
    }
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Vertex old : out.new_to_old) labels.emplace_back(g.label(old));
  }
  out.graph = Graph::from_masks(std::move(rows), std::move(labels));
  return out;
}

Subgraph induced(const Graph& g, std::span<const Vertex> keep) {
  for (Vertex v : keep) {
    if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  return induced(g, to_mask(keep));
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  for (Vertex v : removed) {
    if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  return induced(g, g.vertex_mask() & ~to_mask(removed));
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.v >= g.order() || !g.adjacent(e.u, e.v)) {
    throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph");
  }
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  rows[e.u] &= ~bit(e.v);
  rows[e.v] &= ~bit(e.u);
  return Graph::from_masks(std::move(rows), g.labels());
}

Graph add_edge(const Graph& g, Edge e) {
  if (e.v >= g.order() || e.u == e.v) throw InvalidArgument("invalid edge endpoints");
  if (g.adjacent(e.u, e.v)) throw InvalidArgument("edge already present");
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  rows[e.u] |= bit(e.v);
  rows[e.v] |= bit(e.u);
  return Graph::from_masks(std::move(rows), g.labels());
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const std::size_t shift = a.order();
  if (shift + b.order() > kMaxOrder) throw SizeLimitError("disjoint union exceeds order cap");
  std::vector<VertexMask> rows(a.rows().begin(), a.rows().end());
  for (VertexMask r : b.rows()) rows.push_back(r << shift);
  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    for (std::size_t v = 0; v < a.order(); ++v) labels.emplace_back(a.label(static_cast<Vertex>(v)));
    for (std::size_t v = 0; v < b.order(); ++v) labels.emplace_back(b.label(static_cast<Vertex>(v)));
  }
  return Graph::from_masks(std::move(rows), std::move(labels));
}

Graph path_graph(std::size_t n) {
  EdgeSet e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  EdgeSet e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  EdgeSet e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  EdgeSet e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph::from_edges(leaves + 1, e);
}

}  // namespace siglab
