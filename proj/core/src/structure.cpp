#include "siglab/structure.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "siglab/error.hpp"

namespace siglab {

namespace {

VertexMask reach(const Graph& g, Vertex source, VertexMask allowed) {
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(static_cast<Vertex>(std::countr_zero(m)));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::vector<VertexMask> component_masks(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.vertex_mask();
  while (left) {
    const VertexMask c = reach(g, static_cast<Vertex>(std::countr_zero(left)), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexMask c : component_masks(g)) out.push_back(to_set(c));
  return out;
}

VertexSet cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  int timer = 0;

  std::function<void(Vertex, int)> dfs = [&](Vertex v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (VertexMask m = g.neighbors(v); m; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      if (static_cast<int>(u) == parent) continue;
      if (disc[u] >= 0) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      ++children;
      dfs(u, static_cast<int>(v));
      low[v] = std::min(low[v], low[u]);
      if (parent >= 0 && low[u] >= disc[v]) is_cut[v] = true;
    }
    if (parent < 0 && children > 1) is_cut[v] = true;
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(static_cast<Vertex>(v), -1);
  }
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool is_connected(const Graph& g) { return component_masks(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() + 1 == g.order() && is_connected(g);
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> queue{static_cast<Vertex>(s)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (VertexMask m = g.neighbors(v); m; m &= m - 1) {
        const auto u = static_cast<Vertex>(std::countr_zero(m));
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (VertexMask r : g.rows())
    if (r == 0) return true;
  return false;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  if (source >= g.order()) throw InvalidArgument("vertex " + std::to_string(source) + " out of range");
  std::vector<std::optional<std::size_t>> dist(g.order());
  dist[source] = 0;
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  for (std::size_t d = 1; frontier; ++d) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(static_cast<Vertex>(std::countr_zero(m)));
    next &= ~seen;
    for (VertexMask m = next; m; m &= m - 1) dist[std::countr_zero(m)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

StructureSummary structure(const Graph& g) {
  StructureSummary s;
  const auto comps = component_masks(g);
  s.component_count = comps.size();
  s.cut_vertices = cut_vertices(g);
  const auto deg = g.degrees();
  s.degree_sequence = deg;
  std::sort(s.degree_sequence.begin(), s.degree_sequence.end(), std::greater<>());
  for (const Edge& e : g.edges()) {
    if (deg[e.u] > 2 || deg[e.v] > 2) ++s.theta;
  }
  for (VertexMask c : comps) {
    std::int64_t degree_sum = 0;
    for (VertexMask m = c; m; m &= m - 1) degree_sum += static_cast<std::int64_t>(deg[std::countr_zero(m)]);
    s.component_dimensions.push_back(degree_sum / 2 - std::popcount(c) + 1);
  }
  if (comps.size() == 1) s.dimension = s.component_dimensions.front();
  return s;
}

std::size_t cycle_type(const Graph& g, std::span<const Vertex> cycle_vertices) {
  for (Vertex v : cycle_vertices) {
    if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  const VertexMask c = to_mask(cycle_vertices);
  const std::size_t len = std::popcount(c);
  if (len < 3 || len != cycle_vertices.size()) throw InvalidArgument("cycle needs at least 3 distinct vertices");
  for (VertexMask m = c; m; m &= m - 1) {
    if (std::popcount(g.neighbors(static_cast<Vertex>(std::countr_zero(m))) & c) != 2) {
      throw InvalidArgument("vertex set does not induce a cycle");
    }
  }
  if (reach(g, static_cast<Vertex>(std::countr_zero(c)), c) != c) {
    throw InvalidArgument("vertex set does not induce a cycle");
  }
  std::size_t leaving = 0;
  for (VertexMask m = c; m; m &= m - 1) {
    leaving += std::popcount(g.neighbors(static_cast<Vertex>(std::countr_zero(m))) & ~c);
  }
  return leaving;
}

}  // namespace siglab
