#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace siglab::oracle {

namespace {

using Poly = std::vector<std::int64_t>;

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  if (n == 1) return m[0][0];
  Poly total;
  for (std::size_t col = 0; col < n; ++col) {
    if (std::all_of(m[0][col].begin(), m[0][col].end(), [](auto c) { return c == 0; })) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = mul(m[0][col], det(minor));
    if (col % 2 == 1)
      for (auto& c : term) c = -c;
    total = add(total, term);
  }
  return total;
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) parent[find(e.u)] = find(e.v);
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) count += find(v) == v;
  return count;
}

}  // namespace

std::vector<std::int64_t> cofactor_char_poly(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m[i][j] = {0, 1};
      } else {
        m[i][j] = {g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? -1 : 0};
      }
    }
  Poly p = det(m);
  p.resize(n + 1, 0);
  return p;
}

std::map<std::size_t, std::uint64_t> subset_hamiltonian_census(const Graph& g) {
  std::map<std::size_t, std::uint64_t> out;
  const std::size_t n = g.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < n; ++v)
      if ((s >> v) & 1U) vs.push_back(static_cast<Vertex>(v));
    if (vs.size() < 3) continue;
    // Fix vs[0] first; each cycle then appears twice (two directions).
    std::vector<Vertex> rest(vs.begin() + 1, vs.end());
    std::uint64_t closed = 0;
    do {
      bool ok = g.adjacent(vs[0], rest.front()) && g.adjacent(rest.back(), vs[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.adjacent(rest[i], rest[i + 1]);
      closed += ok;
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (closed) out[vs.size()] += closed / 2;
  }
  return out;
}

VertexSet brute_cut_vertices(const Graph& g) {
  VertexSet out;
  const std::size_t base = component_count(g);
  for (std::size_t v = 0; v < g.order(); ++v) {
    const Vertex gone[] = {static_cast<Vertex>(v)};
    if (component_count(delete_vertices(g, gone).graph) > base) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Graph> labeled_trees(std::size_t n) {
  std::vector<Graph> out;
  if (n == 1) return {Graph(1)};
  if (n == 2) return {path_graph(2)};
  std::vector<std::size_t> seq(n - 2, 0);
  for (;;) {
    std::vector<std::size_t> degree(n, 1);
    for (auto x : seq) ++degree[x];
    EdgeSet edges;
    for (auto x : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(x));
      --degree[leaf];
      --degree[x];
    }
    std::vector<Vertex> last;
    for (std::size_t v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(static_cast<Vertex>(v));
    edges.emplace_back(last[0], last[1]);
    out.push_back(Graph::from_edges(n, edges));

    std::size_t i = seq.size();
    while (i > 0 && seq[i - 1] == n - 1) seq[--i] = 0;
    if (i == 0) break;
    ++seq[i - 1];
  }
  return out;
}

Graph floyd_power(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) d[i][j] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  EdgeSet edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d[i][j] <= k) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph::from_edges(n, edges);
}

}  // namespace siglab::oracle
