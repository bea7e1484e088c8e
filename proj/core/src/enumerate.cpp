#include "siglab/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <string>
#include <unordered_set>

#include "siglab/error.hpp"
#include "siglab/graph6.hpp"

namespace siglab {

namespace {

// Tree from a level sequence (root at level 1, preorder): each node hangs
// from the closest earlier node one level up.
Graph tree_from_levels(const std::vector<std::size_t>& levels) {
  const std::size_t n = levels.size();
  EdgeSet edges;
  std::vector<std::size_t> last_at_level(n + 2, 0);
  last_at_level[levels[0]] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(last_at_level[levels[i] - 1]), static_cast<Vertex>(i));
    last_at_level[levels[i]] = i;
  }
  return Graph::from_edges(n, edges);
}

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (VertexMask m = t.neighbors(v); m; m &= m - 1) {
    const auto u = static_cast<Vertex>(std::countr_zero(m));
    if (u != parent) children.push_back(rooted_code(t, u, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

// Canonical string of a free tree: smallest rooted encoding over its centers.
std::string free_tree_code(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) return std::string(n, '*');
  std::vector<std::size_t> deg = t.degrees();
  VertexMask alive = t.vertex_mask();
  std::size_t left = n;
  while (left > 2) {
    VertexMask leaves = 0;
    for (VertexMask m = alive; m; m &= m - 1) {
      const auto v = std::countr_zero(m);
      if (deg[v] <= 1) leaves |= bit(static_cast<Vertex>(v));
    }
    for (VertexMask m = leaves; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      for (VertexMask k = t.neighbors(v) & alive & ~leaves; k; k &= k - 1) --deg[std::countr_zero(k)];
    }
    alive &= ~leaves;
    left -= std::popcount(leaves);
  }
  std::string best;
  const Vertex none = static_cast<Vertex>(n);
  for (VertexMask m = alive; m; m &= m - 1) {
    std::string code = rooted_code(t, static_cast<Vertex>(std::countr_zero(m)), none);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

void check_tree_size(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidArgument("trees need at least one vertex");
  if (n > cap || n > kMaxOrder) {
    throw SizeLimitError("tree size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
}

std::vector<Graph> add_each_non_edge(const std::vector<Graph>& base) {
  std::vector<Graph> out;
  for (const Graph& g : base) {
    const std::size_t n = g.order();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (!g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
          out.push_back(add_edge(g, Edge(static_cast<Vertex>(u), static_cast<Vertex>(v))));
  }
  return out;
}

}  // namespace

std::vector<Graph> free_trees(std::size_t n, std::size_t cap) {
  check_tree_size(n, cap);
  // Rooted trees as level sequences in reverse lexicographic order, starting
  // from the path and stepping with the Beyer-Hedetniemi successor.
  std::vector<std::size_t> levels(n);
  for (std::size_t i = 0; i < n; ++i) levels[i] = i + 1;

  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (;;) {
    Graph t = tree_from_levels(levels);
    if (seen.insert(free_tree_code(t)).second) out.push_back(std::move(t));

    std::size_t p = n;
    for (std::size_t i = n; i-- > 0;) {
      if (levels[i] > 2) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p;
    while (levels[q] != levels[p] - 1) --q;
    const std::size_t shift = p - q;
    for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - shift];
  }
  return out;
}

std::vector<Graph> unicyclic_from_trees(std::size_t n, std::size_t cap) {
  return add_each_non_edge(free_trees(n, cap));
}

std::vector<Graph> bicyclic_from_unicyclic(std::size_t n, std::size_t cap) {
  return add_each_non_edge(unicyclic_from_trees(n, cap));
}

std::vector<SunSpec> sun_grid(std::size_t t_max, std::size_t pendant_cap) {
  std::vector<SunSpec> out;
  for (std::size_t t = 3; t <= t_max; ++t) {
    SunSpec spec{t, std::vector<std::size_t>(t, 0)};
    for (;;) {
      out.push_back(spec);
      std::size_t i = t;
      while (i > 0 && spec.pendants[i - 1] == pendant_cap) spec.pendants[--i] = 0;
      if (i == 0) break;
      ++spec.pendants[i - 1];
    }
  }
  return out;
}

std::optional<Graph6Reader::Item> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line.front() == '#' || line == ">>graph6<<") continue;
    try {
      Graph g = from_graph6(line, max_order_);
      return Item{Record{line_, std::move(g), std::move(line)}};
    } catch (const ParseError& e) {
      return Item{Failure{line_, e.offset(), e.reason()}};
    } catch (const Error& e) {
      return Item{Failure{line_, 0, e.what()}};
    }
  }
  return std::nullopt;
}

IngestResult ingest_graph6(std::istream& in, bool strict, std::size_t max_order) {
  IngestResult out;
  Graph6Reader reader(in, max_order);
  while (auto item = reader.next()) {
    if (auto* rec = std::get_if<Graph6Reader::Record>(&*item)) {
      out.graphs.push_back(std::move(*rec));
      continue;
    }
    auto& failure = std::get<Graph6Reader::Failure>(*item);
    if (strict) {
      throw ParseError("line " + std::to_string(failure.line) + ": " + failure.message, failure.offset);
    }
    out.errors.push_back(std::move(failure));
  }
  return out;
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw InvalidArgument("bad number '" + std::string(s) + "' in family spec '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("family spec '" + std::string(text) + "' needs the form kind:range");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  FamilySpec spec;
  if (kind == "suns") {
    spec.kind = FamilyKind::Suns;
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw InvalidArgument("suns family needs 'suns:TMAX,CAP'");
    spec.min_size = 3;
    spec.max_size = parse_size(rest.substr(0, comma), text);
    spec.pendant_cap = parse_size(rest.substr(comma + 1), text);
    if (spec.max_size < 3) throw InvalidArgument("suns family needs TMAX >= 3");
    return spec;
  }
  if (kind == "trees") {
    spec.kind = FamilyKind::Trees;
  } else if (kind == "unicyclic") {
    spec.kind = FamilyKind::Unicyclic;
  } else if (kind == "bicyclic") {
    spec.kind = FamilyKind::Bicyclic;
  } else if (kind == "cycles") {
    spec.kind = FamilyKind::Cycles;
  } else {
    throw InvalidArgument("unknown family kind '" + std::string(kind) + "'");
  }
  const auto dots = rest.find("..");
  if (dots == std::string_view::npos) {
    spec.min_size = spec.max_size = parse_size(rest, text);
  } else {
    spec.min_size = parse_size(rest.substr(0, dots), text);
    spec.max_size = parse_size(rest.substr(dots + 2), text);
  }
  if (spec.min_size > spec.max_size) throw InvalidArgument("empty size range in '" + std::string(text) + "'");
  if (spec.kind == FamilyKind::Cycles && spec.min_size < 3) throw InvalidArgument("cycles start at length 3");
  if (spec.min_size == 0) throw InvalidArgument("sizes start at 1");
  return spec;
}

std::vector<FamilyItem> generate_family(const FamilySpec& spec) {
  std::vector<FamilyItem> out;
  auto push_all = [&](std::vector<Graph> graphs, const std::string& tag, std::size_t n) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      out.push_back({std::move(graphs[i]), tag + ":n=" + std::to_string(n) + "#" + std::to_string(i), std::nullopt});
    }
  };
  switch (spec.kind) {
    case FamilyKind::Trees:
      for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) push_all(free_trees(n), "trees", n);
      break;
    case FamilyKind::Unicyclic:
      for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) push_all(unicyclic_from_trees(n), "unicyclic", n);
      break;
    case FamilyKind::Bicyclic:
      for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) push_all(bicyclic_from_unicyclic(n), "bicyclic", n);
      break;
    case FamilyKind::Cycles:
      for (std::size_t n = spec.min_size; n <= spec.max_size; ++n) {
        out.push_back({cycle_graph(n), "cycles:n=" + std::to_string(n), std::nullopt});
      }
      break;
    case FamilyKind::Suns:
      for (auto& s : sun_grid(spec.max_size, spec.pendant_cap)) {
        std::string tag = "suns:t=" + std::to_string(s.t) + ",[";
        for (std::size_t i = 0; i < s.t; ++i) tag += (i ? "," : "") + std::to_string(s.pendants[i]);
        tag += "]";
        Graph g = sun(s);
        out.push_back({std::move(g), std::move(tag), std::move(s)});
      }
      break;
  }
  return out;
}

}  // namespace siglab
