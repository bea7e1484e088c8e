#include "siglab/transforms.hpp"

#include <algorithm>
#include <string>

#include "siglab/error.hpp"

namespace siglab {

namespace {

std::string edge_label(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

void check_result_order(std::size_t order, const char* what) {
  if (order > kMaxOrder) {
    throw SizeLimitError(std::string(what) + " would have " + std::to_string(order) +
                         " vertices, above the cap of " + std::to_string(kMaxOrder));
  }
}

// Vertex labels of g followed by one label per edge.
std::vector<std::string> vertex_then_edge_labels(const Graph& g, const EdgeSet& edges) {
  std::vector<std::string> labels;
  labels.reserve(g.order() + edges.size());
  for (std::size_t v = 0; v < g.order(); ++v) labels.emplace_back(g.label(static_cast<Vertex>(v)));
  for (const Edge& e : edges) labels.push_back(edge_label(e));
  return labels;
}

}  // namespace

Graph line_graph(const Graph& g) {
  const EdgeSet edges = g.edges();
  check_result_order(edges.size(), "line graph");
  std::vector<VertexMask> incident(g.order(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u] |= bit(static_cast<Vertex>(i));
    incident[edges[i].v] |= bit(static_cast<Vertex>(i));
  }
  std::vector<VertexMask> rows(edges.size(), 0);
  std::vector<std::string> labels;
  labels.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    rows[i] = (incident[edges[i].u] | incident[edges[i].v]) & ~bit(static_cast<Vertex>(i));
    labels.push_back(edge_label(edges[i]));
  }
  return Graph::from_masks(std::move(rows), std::move(labels));
}

Graph power(const Graph& g, std::size_t k) {
  if (k < 1) throw InvalidArgument("power exponent must be at least 1");
  std::vector<VertexMask> rows(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    VertexMask seen = bit(static_cast<Vertex>(v));
    VertexMask frontier = seen;
    for (std::size_t d = 0; d < k && frontier; ++d) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(static_cast<Vertex>(std::countr_zero(m)));
      frontier = next & ~seen;
      seen |= frontier;
    }
    rows[v] = seen & ~bit(static_cast<Vertex>(v));
  }
  return Graph::from_masks(std::move(rows), g.labels());
}

Graph subdivision(const Graph& g) {
  const EdgeSet edges = g.edges();
  const std::size_t n = g.order();
  check_result_order(n + edges.size(), "subdivision");
  EdgeSet out;
  out.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto mid = static_cast<Vertex>(n + i);
    out.emplace_back(edges[i].u, mid);
    out.emplace_back(edges[i].v, mid);
  }
  return Graph::from_edges(n + edges.size(), out, vertex_then_edge_labels(g, edges));
}

Graph total_graph(const Graph& g) {
  const EdgeSet edges = g.edges();
  const std::size_t n = g.order();
  check_result_order(n + edges.size(), "total graph");
  std::vector<VertexMask> rows(n + edges.size(), 0);
  std::vector<VertexMask> incident(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const VertexMask self = bit(static_cast<Vertex>(n + i));
    incident[edges[i].u] |= self;
    incident[edges[i].v] |= self;
  }
  for (std::size_t v = 0; v < n; ++v) rows[v] = g.neighbors(static_cast<Vertex>(v)) | incident[v];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    rows[n + i] = (bit(e.u) | bit(e.v) | incident[e.u] | incident[e.v]) & ~bit(static_cast<Vertex>(n + i));
  }
  return Graph::from_masks(std::move(rows), vertex_then_edge_labels(g, edges));
}

void validate(const SunSpec& spec) {
  if (spec.t < 3) throw InvalidArgument("sun graph needs a cycle of length at least 3");
  if (spec.pendants.size() != spec.t) {
    throw InvalidArgument("sun graph needs one pendant count per cycle vertex");
  }
}

Graph sun(const SunSpec& spec) {
  validate(spec);
  std::size_t order = spec.t;
  for (std::size_t c : spec.pendants) order += c;
  check_result_order(order, "sun graph");
  EdgeSet edges;
  for (std::size_t i = 0; i < spec.t; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % spec.t));
  }
  auto next = static_cast<Vertex>(spec.t);
  for (std::size_t i = 0; i < spec.t; ++i) {
    for (std::size_t j = 0; j < spec.pendants[i]; ++j) edges.emplace_back(static_cast<Vertex>(i), next++);
  }
  return Graph::from_edges(order, edges);
}

namespace {

Vertex other_neighbor(const Graph& g, Vertex v, Vertex not_this) {
  const VertexMask rest = g.neighbors(v) & ~bit(not_this);
  return static_cast<Vertex>(std::countr_zero(rest));
}

bool is_admissible(const Graph& g, const ContractionSite& s) {
  const std::size_t n = g.order();
  for (Vertex v : s.inner)
    if (v >= n || g.degree(v) != 2) return false;
  if (s.u >= n || s.w >= n) return false;
  const VertexMask inner = to_mask(s.inner);
  if (std::popcount(inner) != 4) return false;
  for (std::size_t i = 0; i + 1 < 4; ++i)
    if (!g.adjacent(s.inner[i], s.inner[i + 1])) return false;
  if ((inner & (bit(s.u) | bit(s.w))) != 0) return false;
  if (!g.adjacent(s.u, s.inner[0]) || !g.adjacent(s.w, s.inner[3])) return false;
  return s.u != s.w && !g.adjacent(s.u, s.w);
}

}  // namespace

std::vector<ContractionSite> find_contraction_sites(const Graph& g) {
  std::vector<ContractionSite> sites;
  const std::size_t n = g.order();
  for (std::size_t start = 0; start < n; ++start) {
    const auto a = static_cast<Vertex>(start);
    if (g.degree(a) != 2) continue;
    for (VertexMask m = g.neighbors(a); m; m &= m - 1) {
      ContractionSite s;
      s.inner[0] = a;
      s.inner[1] = static_cast<Vertex>(std::countr_zero(m));
      if (g.degree(s.inner[1]) != 2) continue;
      s.inner[2] = other_neighbor(g, s.inner[1], s.inner[0]);
      if (g.degree(s.inner[2]) != 2) continue;
      s.inner[3] = other_neighbor(g, s.inner[2], s.inner[1]);
      if (s.inner[3] <= s.inner[0]) continue;
      if (g.degree(s.inner[3]) != 2) continue;
      s.u = other_neighbor(g, s.inner[0], s.inner[1]);
      s.w = other_neighbor(g, s.inner[3], s.inner[2]);
      if (is_admissible(g, s)) sites.push_back(s);
    }
  }
  std::sort(sites.begin(), sites.end(),
            [](const ContractionSite& x, const ContractionSite& y) { return x.inner < y.inner; });
  return sites;
}

Graph contract_path4(const Graph& g, const ContractionSite& site) {
  if (!is_admissible(g, site)) throw InvalidArgument("contraction site is not admissible in this graph");
  const Subgraph rest = delete_vertices(g, site.inner);
  return add_edge(rest.graph, Edge(*rest.old_to_new[site.u], *rest.old_to_new[site.w]));
}

Reduction reduce_fully(const Graph& g) {
  Reduction r{g, 0};
  for (;;) {
    const auto sites = find_contraction_sites(r.graph);
    if (sites.empty()) return r;
    r.graph = contract_path4(r.graph, sites.front());
    ++r.steps;
  }
}

}  // namespace siglab
