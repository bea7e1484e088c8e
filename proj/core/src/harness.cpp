#include "siglab/harness.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "harness_internal.hpp"
#include "siglab/error.hpp"
#include "siglab/graph6.hpp"
#include "siglab/inertia.hpp"
#include "siglab/structure.hpp"

namespace siglab {

namespace {

struct CheckName {
  CheckId id;
  std::string_view name;
};

constexpr std::array<CheckName, 17> kCheckNames{{
    {CheckId::Conjecture, "conjecture-1.1"},
    {CheckId::PathContraction, "lemma-2.1"},
    {CheckId::SunNullity, "lemma-2.2"},
    {CheckId::CutVertexRank, "lemma-2.3"},
    {CheckId::VertexDeletion, "lemma-2.4"},
    {CheckId::InducedSameRank, "cor-2.5"},
    {CheckId::CutVertexFullRank, "cor-2.6"},
    {CheckId::CutVertexSplit, "lemma-2.7"},
    {CheckId::CutVertexRaise, "lemma-2.8"},
    {CheckId::CutVertexC5, "cor-2.9"},
    {CheckId::LineFamilies, "lemma-3.1"},
    {CheckId::LineTree, "thm-3.2"},
    {CheckId::LineGraph, "thm-3.3"},
    {CheckId::PowerCycles, "lemma-4.1"},
    {CheckId::PowerTree, "thm-4.2"},
    {CheckId::TotalTree, "cor-4.3"},
    {CheckId::TotalEqSquare, "total-eq-square"},
}};

}  // namespace

std::string_view to_string(CheckId id) {
  for (const auto& c : kCheckNames)
    if (c.id == id) return c.name;
  return "unknown";
}

std::optional<CheckId> parse_check_id(std::string_view text) {
  for (const auto& c : kCheckNames)
    if (c.name == text) return c.id;
  return std::nullopt;
}

std::vector<CheckId> all_check_ids() {
  std::vector<CheckId> out;
  for (const auto& c : kCheckNames) out.push_back(c.id);
  return out;
}

bool is_open_conjecture(CheckId id) { return id == CheckId::Conjecture; }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Vacuous: return "vacuous";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

Witness& Witness::set_value(std::string key, WitnessValue value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const WitnessValue* Witness::find(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return &v;
  return nullptr;
}

namespace detail {

CheckReport make_report(CheckId id, const Graph& g, Verdict verdict) {
  CheckReport r;
  r.check = id;
  r.graph6 = to_graph6(g);
  r.verdict = verdict;
  return r;
}

std::vector<std::int64_t> as_ints(const VertexSet& vs) { return {vs.begin(), vs.end()}; }

void put_inertia(Witness& w, const std::string& prefix, const Inertia& in) {
  w.set(prefix + "p", in.positive).set(prefix + "n", in.negative).set(prefix + "eta", in.nullity);
  w.set(prefix + "s", in.signature());
}

}  // namespace detail

using detail::as_ints;
using detail::make_report;
using detail::put_inertia;

namespace {

// -c3 <= s <= c5 on subject, reported against input. Either side can be
// switched off for statements that only claim one bound.
CheckReport bounds_report(CheckId id, const Graph& input, const Graph& subject, std::uint64_t budget,
                          bool lower, bool upper, bool exact_counts = false) {
  const Inertia in = inertia(subject);
  const long s = in.signature();
  const auto need3 = static_cast<std::uint64_t>(lower ? std::max(0L, -s) : 0L);
  const auto need5 = static_cast<std::uint64_t>(upper ? std::max(0L, s) : 0L);
  const CycleCensus c = exact_counts ? census(subject, budget) : census_until(subject, need3, need5, budget);
  Verdict v = Verdict::Pass;
  if (c.budget_exceeded) {
    v = Verdict::Skipped;
  } else if ((lower && s < -static_cast<long>(c.c3)) || (upper && s > static_cast<long>(c.c5))) {
    v = Verdict::Fail;
  }
  auto r = make_report(id, input, v);
  put_inertia(r.witness, "", in);
  r.witness.set("c3", c.c3).set("c5", c.c5).set("c1", c.c1).set("cycles", c.total);
  r.witness.set("budgetExceeded", c.budget_exceeded);
  if (!exact_counts) r.witness.set("countsAreLowerBounds", c.stopped_at_target);
  if (&input != &subject) r.witness.set("subjectGraph6", to_graph6(subject));
  return r;
}

CheckReport line_bounds_report(CheckId id, const Graph& g, std::uint64_t budget) {
  const bool tree = is_tree(g);
  if (has_isolated_vertex(g) || (id == CheckId::LineTree && (!tree || g.edge_count() == 0))) {
    auto r = make_report(id, g, Verdict::Vacuous);
    r.witness.set("tree", tree).set("isolatedVertex", has_isolated_vertex(g));
    return r;
  }
  const Graph line = line_graph(g);
  auto r = bounds_report(id, g, line, budget, id != CheckId::LineTree, true);
  r.witness.set("tree", tree);
  return r;
}

}  // namespace

CheckReport check_conjecture(const Graph& g, std::uint64_t budget) {
  auto r = bounds_report(CheckId::Conjecture, g, g, budget, true, true, true);
  const auto* s = std::get_if<std::int64_t>(r.witness.find("s"));
  const auto* c1 = std::get_if<std::int64_t>(r.witness.find("c1"));
  r.witness.set("weakBoundHolds", std::abs(*s) <= *c1);
  return r;
}

ZeroChainProfile zero_chain_profile(const SunSpec& spec) {
  validate(spec);
  ZeroChainProfile z;
  const std::size_t t = spec.t;
  for (std::size_t c : spec.pendants) z.nonzero.push_back(c > 0);
  z.m = static_cast<std::size_t>(std::count(z.nonzero.begin(), z.nonzero.end(), true));
  if (z.m == 0) return z;
  // Start scanning just after a nonzero entry so no run straddles the scan
  // origin; runs are then maximal in the cyclic sense.
  std::size_t origin = 0;
  while (!z.nonzero[origin]) ++origin;
  std::size_t i = 1;
  while (i <= t) {
    const std::size_t idx = (origin + i) % t;
    if (z.nonzero[idx]) {
      ++i;
      continue;
    }
    ZeroChainProfile::Run run{idx, 0};
    while (i <= t && !z.nonzero[(origin + i) % t]) {
      ++run.length;
      ++i;
    }
    z.chains.push_back(run);
  }
  std::sort(z.chains.begin(), z.chains.end(),
            [](const auto& a, const auto& b) { return a.start < b.start; });
  return z;
}

std::size_t predict_sun_nullity(const SunSpec& spec) {
  const ZeroChainProfile z = zero_chain_profile(spec);
  const std::size_t t = spec.t;
  if (z.m == 0) return t % 4 == 0 ? 2 : 0;

  const bool small = std::all_of(spec.pendants.begin(), spec.pendants.end(),
                                 [](std::size_t c) { return c <= 1; });
  const bool even_chains = std::all_of(z.chains.begin(), z.chains.end(),
                                       [](const auto& r) { return r.length % 2 == 0; });
  const bool first = small && even_chains && (t + z.m) % 4 == 0;

  // 1-based odd positions n_1, n_3, ... are 0-based even indices.
  bool odd_positions_zero = true;
  bool even_positions_zero = true;
  for (std::size_t i = 0; i < t; ++i) {
    if (spec.pendants[i] == 0) continue;
    (i % 2 == 0 ? odd_positions_zero : even_positions_zero) = false;
  }
  const bool second = t % 4 == 0 && (odd_positions_zero || even_positions_zero);
  return first || second ? 1 : 0;
}

CheckReport check_sun_nullity(const SunSpec& spec) {
  const Graph g = sun(spec);
  const std::size_t predicted = predict_sun_nullity(spec);
  const std::size_t actual = nullity(line_graph(g));
  auto r = make_report(CheckId::SunNullity, g, predicted == actual ? Verdict::Pass : Verdict::Fail);
  std::vector<std::int64_t> pendants(spec.pendants.begin(), spec.pendants.end());
  r.witness.set("t", spec.t).set("pendants", pendants).set("m", zero_chain_profile(spec).m);
  r.witness.set("predictedNullity", predicted).set("nullity", actual);
  return r;
}

std::vector<CheckReport> check_cut_vertex_laws(const Graph& g, std::uint64_t budget) {
  return detail::cut_vertex_reports(g, budget, std::nullopt);
}

std::vector<CheckReport> check_vertex_deletion_laws(const Graph& g, std::size_t induced_subset_limit) {
  return detail::deletion_reports(g, induced_subset_limit, std::nullopt);
}

std::vector<CheckReport> check_path_contraction(const Graph& g) {
  std::vector<CheckReport> out;
  const auto sites = find_contraction_sites(g);
  if (sites.empty()) {
    auto r = make_report(CheckId::PathContraction, g, Verdict::Vacuous);
    r.witness.set("sites", std::int64_t{0});
    out.push_back(std::move(r));
    return out;
  }
  const Inertia in_g = inertia(g);
  for (const auto& site : sites) {
    const Graph h = contract_path4(g, site);
    const Inertia in_h = inertia(h);
    const bool ok = in_g.positive == in_h.positive + 2 && in_g.negative == in_h.negative + 2 &&
                    in_g.nullity == in_h.nullity && in_g.signature() == in_h.signature();
    auto r = make_report(CheckId::PathContraction, g, ok ? Verdict::Pass : Verdict::Fail);
    r.witness.set("inner", std::vector<std::int64_t>(site.inner.begin(), site.inner.end()));
    r.witness.set("u", site.u).set("w", site.w);
    put_inertia(r.witness, "G.", in_g);
    put_inertia(r.witness, "H.", in_h);
    r.witness.set("H", to_graph6(h));
    out.push_back(std::move(r));
  }
  return out;
}

CheckReport check_line_graph_theorems(const Graph& g, std::uint64_t budget) {
  return line_bounds_report(is_tree(g) ? CheckId::LineTree : CheckId::LineGraph, g, budget);
}

namespace {

std::string line_family_of(const Graph& g) {
  if (!is_connected(g) || g.order() < 3) return {};
  const auto deg = g.degrees();
  auto count = [&](std::size_t d) { return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), d)); };
  const std::size_t n = g.order();
  if (g.edge_count() == n && count(1) == 2 && count(1) + count(2) + count(3) + count(4) == n) {
    VertexMask leaves = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (deg[v] == 1) leaves |= bit(static_cast<Vertex>(v));
    const VertexMask ring = g.vertex_mask() & ~leaves;
    for (VertexMask m = ring; m; m &= m - 1) {
      if (std::popcount(g.neighbors(static_cast<Vertex>(std::countr_zero(m))) & ring) != 2) return {};
    }
    return "cycle-two-pendants";
  }
  if (g.edge_count() == n + 1 && count(4) == 1 && count(2) == n - 1) return "cycles-share-vertex";
  if (g.edge_count() == n + 1 && count(3) == 2 && count(2) == n - 2) return "cycles-share-path";
  return {};
}

bool all_cycles_two_mod_four(const Graph& g) {
  const CycleCensus c = census(g);
  if (c.budget_exceeded || c.total == 0) return false;
  return std::all_of(c.by_length.begin(), c.by_length.end(), [](const auto& kv) { return kv.first % 4 == 2; });
}

// Theta graph: endpoints joined by three internally disjoint paths.
Graph theta_graph(std::size_t a, std::size_t b, std::size_t c) {
  EdgeSet edges;
  Vertex next = 2;
  for (std::size_t len : {a, b, c}) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::from_edges(next, edges);
}

Graph cycle_with_pendants(std::size_t len, Vertex a, Vertex b) {
  EdgeSet edges;
  for (std::size_t i = 0; i < len; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % len));
  edges.emplace_back(a, static_cast<Vertex>(len));
  edges.emplace_back(b, static_cast<Vertex>(len + 1));
  return Graph::from_edges(len + 2, edges);
}

Graph cycles_sharing_vertex(std::size_t a, std::size_t b) {
  EdgeSet edges;
  Vertex next = 1;
  for (std::size_t len : {a, b}) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 0);
  }
  return Graph::from_edges(next, edges);
}

}  // namespace

bool is_line_family_representative(const Graph& g) {
  return !line_family_of(g).empty() && all_cycles_two_mod_four(g);
}

CheckReport check_line_families(const Graph& g, std::uint64_t budget) {
  const std::string family = line_family_of(g);
  if (family.empty() || !all_cycles_two_mod_four(g)) {
    return make_report(CheckId::LineFamilies, g, Verdict::Vacuous);
  }
  const Graph line = line_graph(g);
  const Reduction red = reduce_fully(line);
  const Inertia in_line = inertia(line);
  const Inertia in_red = inertia(red.graph);
  const CycleCensus c = census(line, budget);
  Verdict v = Verdict::Pass;
  if (c.budget_exceeded) {
    v = Verdict::Skipped;
  } else if (in_line.signature() > static_cast<long>(c.c5) || in_line.signature() != in_red.signature()) {
    v = Verdict::Fail;
  }
  auto r = make_report(CheckId::LineFamilies, g, v);
  r.witness.set("family", family);
  put_inertia(r.witness, "L.", in_line);
  r.witness.set("L.c5", c.c5);
  put_inertia(r.witness, "reduced.", in_red);
  r.witness.set("reducedGraph6", to_graph6(red.graph)).set("reductionSteps", red.steps);
  return r;
}

std::vector<NamedGraph> line_family_representatives() {
  return {
      {"C6 + pendants at adjacent vertices", cycle_with_pendants(6, 0, 1)},
      {"C6 + pendants at opposite vertices", cycle_with_pendants(6, 0, 3)},
      {"two C6 sharing a vertex", cycles_sharing_vertex(6, 6)},
      {"two C6 sharing an edge", theta_graph(1, 5, 5)},
      {"two C6 sharing a path of length 3", theta_graph(3, 3, 3)},
  };
}

namespace {

CheckReport power_tree_bounds(const Graph& tree, std::size_t k, std::uint64_t budget) {
  auto r = bounds_report(CheckId::PowerTree, tree, power(tree, k), budget, true, true);
  r.witness.set("k", k);
  return r;
}

}  // namespace

std::vector<CheckReport> check_power_tree_theorems(const Graph& tree, std::size_t k, std::uint64_t budget) {
  if (!is_tree(tree)) throw InvalidArgument("power tree check needs a tree");
  if (k < 2) throw InvalidArgument("power tree check needs k >= 2");
  return {power_tree_bounds(tree, k, budget), check_power_cycles(tree, k)};
}

CheckReport check_power_cycles(const Graph& g, std::size_t k) {
  if (k < 2 || g.order() < 5 || !is_connected(g)) {
    auto r = make_report(CheckId::PowerCycles, g, Verdict::Vacuous);
    r.witness.set("k", k).set("order", g.order());
    return r;
  }
  const Graph p = power(g, k);
  const std::array<CycleTarget, 2> targets{CycleTarget::length(3), CycleTarget::length(5)};
  std::vector<std::int64_t> missing3, missing5;
  for (std::size_t v = 0; v < p.order(); ++v) {
    const auto found = cycles_through_vertex(p, static_cast<Vertex>(v), targets);
    if (!found[0]) missing3.push_back(static_cast<std::int64_t>(v));
    if (!found[1]) missing5.push_back(static_cast<std::int64_t>(v));
  }
  const bool ok = missing3.empty() && missing5.empty();
  auto r = make_report(CheckId::PowerCycles, g, ok ? Verdict::Pass : Verdict::Fail);
  r.witness.set("k", k).set("verticesWithoutC3", missing3).set("verticesWithoutC5", missing5);
  r.witness.set("powerGraph6", to_graph6(p));
  return r;
}

std::vector<CheckReport> check_total_graph(const Graph& tree, std::uint64_t budget) {
  if (!is_tree(tree)) throw InvalidArgument("total graph check needs a tree");
  const Graph total = total_graph(tree);
  const Graph square = power(subdivision(tree), 2);
  std::vector<CheckReport> out;
  auto eq = make_report(CheckId::TotalEqSquare, tree, identical(total, square) ? Verdict::Pass : Verdict::Fail);
  eq.witness.set("total", to_graph6(total)).set("squareOfSubdivision", to_graph6(square));
  out.push_back(std::move(eq));
  out.push_back(bounds_report(CheckId::TotalTree, tree, total, budget, true, true));
  return out;
}

std::vector<CheckReport> run_check(CheckId id, const FamilyItem& item, const CheckOptions& options) {
  const Graph& g = item.graph;
  std::vector<CheckReport> out;
  auto vacuous = [&](const char* reason) {
    auto r = make_report(id, g, Verdict::Vacuous);
    r.witness.set("reason", reason);
    out.push_back(std::move(r));
  };
  switch (id) {
    case CheckId::Conjecture:
      out.push_back(check_conjecture(g, options.budget));
      break;
    case CheckId::PathContraction:
      out = check_path_contraction(g);
      break;
    case CheckId::SunNullity:
      if (item.sun) {
        out.push_back(check_sun_nullity(*item.sun));
      } else {
        vacuous("not a sun graph item");
      }
      break;
    case CheckId::CutVertexRank:
    case CheckId::CutVertexFullRank:
    case CheckId::CutVertexSplit:
    case CheckId::CutVertexRaise:
    case CheckId::CutVertexC5:
      out = detail::cut_vertex_reports(g, options.budget, id);
      break;
    case CheckId::VertexDeletion:
    case CheckId::InducedSameRank:
      out = detail::deletion_reports(g, options.induced_subset_limit, id);
      break;
    case CheckId::LineFamilies:
      out.push_back(check_line_families(g, options.budget));
      break;
    case CheckId::LineTree:
    case CheckId::LineGraph:
      out.push_back(line_bounds_report(id, g, options.budget));
      break;
    case CheckId::PowerCycles:
      for (std::size_t k : options.powers) out.push_back(check_power_cycles(g, k));
      break;
    case CheckId::PowerTree:
      if (!is_tree(g)) {
        vacuous("not a tree");
        break;
      }
      for (std::size_t k : options.powers) {
        if (k < 2) continue;
        out.push_back(power_tree_bounds(g, k, options.budget));
      }
      break;
    case CheckId::TotalTree:
    case CheckId::TotalEqSquare:
      if (!is_tree(g)) {
        vacuous("not a tree");
        break;
      }
      for (auto& r : check_total_graph(g, options.budget))
        if (r.check == id) out.push_back(std::move(r));
      break;
  }
  for (auto& r : out) r.provenance = item.provenance;
  return out;
}

void Summary::add(Verdict v) {
  switch (v) {
    case Verdict::Pass: ++pass; break;
    case Verdict::Fail: ++fail; break;
    case Verdict::Vacuous: ++vacuous; break;
    case Verdict::Skipped: ++skipped; break;
  }
}

Summary& Summary::operator+=(const Summary& o) {
  items += o.items;
  pass += o.pass;
  fail += o.fail;
  vacuous += o.vacuous;
  skipped += o.skipped;
  errors += o.errors;
  return *this;
}

}  // namespace siglab
