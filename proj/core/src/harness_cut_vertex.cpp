#include <algorithm>
#include <numeric>
#include <string>

#include "harness_internal.hpp"
#include "siglab/census.hpp"
#include "siglab/structure.hpp"

namespace siglab::detail {

std::vector<VertexMask> components_within(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left) {
    VertexMask seen = left & (~left + 1);
    VertexMask frontier = seen;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(static_cast<Vertex>(std::countr_zero(m)));
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    out.push_back(seen);
    left &= ~seen;
  }
  return out;
}

namespace {

bool wanted(std::optional<CheckId> only, CheckId id) { return !only || *only == id; }

constexpr CheckId kCutVertexChecks[] = {CheckId::CutVertexRank, CheckId::CutVertexFullRank,
                                        CheckId::CutVertexSplit, CheckId::CutVertexRaise,
                                        CheckId::CutVertexC5};

struct Piece {
  VertexMask mask = 0;
  Inertia alone;       // G_i
  Inertia with_x;      // G_i + x
  Inertia complement;  // G - G_i
};

// Census of an induced subgraph, memoized per mask within one graph.
class CensusCache {
 public:
  CensusCache(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  const CycleCensus& of(VertexMask mask) {
    for (auto& [m, c] : cache_)
      if (m == mask) return c;
    cache_.emplace_back(mask, census(induced(g_, mask).graph, budget_));
    return cache_.back().second;
  }

 private:
  const Graph& g_;
  std::uint64_t budget_;
  std::vector<std::pair<VertexMask, CycleCensus>> cache_;
};

}  // namespace

std::vector<CheckReport> cut_vertex_reports(const Graph& g, std::uint64_t budget,
                                            std::optional<CheckId> only) {
  std::vector<CheckReport> out;
  const VertexSet cuts = cut_vertices(g);
  if (cuts.empty()) {
    for (CheckId id : kCutVertexChecks) {
      if (!wanted(only, id)) continue;
      auto r = make_report(id, g, Verdict::Vacuous);
      r.witness.set("cutVertices", std::int64_t{0});
      out.push_back(std::move(r));
    }
    return out;
  }

  const VertexMask full = g.vertex_mask();
  const Inertia in_g = inertia(g);
  const long s_g = in_g.signature();
  CensusCache censuses(g, budget);

  for (Vertex x : cuts) {
    const VertexMask rest = full & ~bit(x);
    const Inertia in_gx = induced_inertia(g, rest);
    std::vector<Piece> pieces;
    for (VertexMask c : components_within(g, rest)) {
      pieces.push_back({c, induced_inertia(g, c), induced_inertia(g, c | bit(x)), induced_inertia(g, full & ~c)});
    }

    auto base = [&](CheckId id, Verdict v) {
      auto r = make_report(id, g, v);
      r.witness.set("x", static_cast<std::int64_t>(x));
      r.witness.set("rG", in_g.rank()).set("sG", s_g);
      r.witness.set("rGminusX", in_gx.rank()).set("sGminusX", in_gx.signature());
      return r;
    };
    auto piece_fields = [&](CheckReport& r, const Piece& p) {
      r.witness.set("component", as_ints(to_set(p.mask)));
      r.witness.set("rGi", p.alone.rank()).set("sGi", p.alone.signature());
      r.witness.set("rGiPlusX", p.with_x.rank()).set("sGiPlusX", p.with_x.signature());
      r.witness.set("rGminusGi", p.complement.rank()).set("sGminusGi", p.complement.signature());
    };

    for (const Piece& p : pieces) {
      const bool raises_by_two = p.with_x.rank() == p.alone.rank() + 2;
      const bool keeps_rank = p.with_x.rank() == p.alone.rank();

      if (wanted(only, CheckId::CutVertexRank)) {
        Verdict v = Verdict::Vacuous;
        std::string clause = "none";
        if (raises_by_two) {
          clause = "rank+2";
          v = in_g.rank() == in_gx.rank() + 2 ? Verdict::Pass : Verdict::Fail;
        } else if (keeps_rank) {
          clause = "rank-kept";
          v = in_g.rank() == p.alone.rank() + p.complement.rank() ? Verdict::Pass : Verdict::Fail;
        }
        auto r = base(CheckId::CutVertexRank, v);
        piece_fields(r, p);
        r.witness.set("clause", clause);
        out.push_back(std::move(r));
      }
      if (wanted(only, CheckId::CutVertexFullRank)) {
        Verdict v = Verdict::Vacuous;
        if (raises_by_two) v = s_g == in_gx.signature() ? Verdict::Pass : Verdict::Fail;
        auto r = base(CheckId::CutVertexFullRank, v);
        piece_fields(r, p);
        out.push_back(std::move(r));
      }
      if (wanted(only, CheckId::CutVertexSplit)) {
        Verdict v = Verdict::Vacuous;
        if (keeps_rank) {
          v = s_g == p.alone.signature() + p.complement.signature() ? Verdict::Pass : Verdict::Fail;
        }
        auto r = base(CheckId::CutVertexSplit, v);
        piece_fields(r, p);
        r.witness.set("clause", "component");
        out.push_back(std::move(r));
      }
    }

    std::vector<std::int64_t> s_pieces, s_pieces_x;
    for (const Piece& p : pieces) {
      s_pieces.push_back(p.alone.signature());
      s_pieces_x.push_back(p.with_x.signature());
    }

    if (wanted(only, CheckId::CutVertexSplit)) {
      const bool all_keep = std::all_of(pieces.begin(), pieces.end(),
                                        [](const Piece& p) { return p.with_x.rank() == p.alone.rank(); });
      Verdict v = Verdict::Vacuous;
      if (all_keep) v = s_g == in_gx.signature() ? Verdict::Pass : Verdict::Fail;
      auto r = base(CheckId::CutVertexSplit, v);
      r.witness.set("clause", "all-components");
      r.witness.set("sComponents", s_pieces).set("sComponentsPlusX", s_pieces_x);
      out.push_back(std::move(r));
    }

    if (wanted(only, CheckId::CutVertexRaise)) {
      Verdict v = Verdict::Vacuous;
      std::int64_t witness_index = -1;
      if (s_g == in_gx.signature() + 1) {
        const long total = std::accumulate(s_pieces.begin(), s_pieces.end(), 0L);
        for (std::size_t l = 0; l < pieces.size(); ++l) {
          const bool raised = pieces[l].with_x.signature() == pieces[l].alone.signature() + 1;
          const bool decomposes = s_g == pieces[l].with_x.signature() + (total - s_pieces[l]);
          if (raised && decomposes) {
            witness_index = static_cast<std::int64_t>(l);
            break;
          }
        }
        v = witness_index >= 0 ? Verdict::Pass : Verdict::Fail;
      }
      auto r = base(CheckId::CutVertexRaise, v);
      r.witness.set("sComponents", s_pieces).set("sComponentsPlusX", s_pieces_x);
      r.witness.set("l", witness_index);
      out.push_back(std::move(r));
    }

    if (wanted(only, CheckId::CutVertexC5)) {
      Verdict v = Verdict::Vacuous;
      bool skipped = false;
      bool hypothesis = true;
      std::vector<std::int64_t> c5_pieces, c5_pieces_x;
      for (const Piece& p : pieces) {
        const CycleCensus& a = censuses.of(p.mask);
        const CycleCensus& b = censuses.of(p.mask | bit(x));
        skipped = skipped || a.budget_exceeded || b.budget_exceeded;
        c5_pieces.push_back(static_cast<std::int64_t>(a.c5));
        c5_pieces_x.push_back(static_cast<std::int64_t>(b.c5));
        if (p.alone.signature() > static_cast<long>(a.c5) || p.with_x.signature() > static_cast<long>(b.c5)) {
          hypothesis = false;
        }
      }
      const CycleCensus& whole = censuses.of(full);
      skipped = skipped || whole.budget_exceeded;
      if (skipped) {
        v = Verdict::Skipped;
      } else if (hypothesis) {
        v = s_g <= static_cast<long>(whole.c5) ? Verdict::Pass : Verdict::Fail;
      }
      auto r = base(CheckId::CutVertexC5, v);
      r.witness.set("c5G", static_cast<std::int64_t>(whole.c5));
      r.witness.set("sComponents", s_pieces).set("sComponentsPlusX", s_pieces_x);
      r.witness.set("c5Components", c5_pieces).set("c5ComponentsPlusX", c5_pieces_x);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckReport> deletion_reports(const Graph& g, std::size_t induced_subset_limit,
                                          std::optional<CheckId> only) {
  std::vector<CheckReport> out;
  const VertexMask full = g.vertex_mask();
  const Inertia in_g = inertia(g);
  const long s_g = in_g.signature();

  if (wanted(only, CheckId::VertexDeletion)) {
    if (g.order() == 0) out.push_back(make_report(CheckId::VertexDeletion, g, Verdict::Vacuous));
    for (std::size_t v = 0; v < g.order(); ++v) {
      const Inertia in_v = induced_inertia(g, full & ~bit(static_cast<Vertex>(v)));
      const long diff = s_g - in_v.signature();
      bool ok = diff >= -1 && diff <= 1;
      const bool rank_clause = in_v.rank() == in_g.rank() || in_v.rank() + 2 == in_g.rank();
      if (rank_clause) ok = ok && diff == 0;
      auto r = make_report(CheckId::VertexDeletion, g, ok ? Verdict::Pass : Verdict::Fail);
      r.witness.set("x", v).set("rG", in_g.rank()).set("sG", s_g);
      r.witness.set("rGminusX", in_v.rank()).set("sGminusX", in_v.signature());
      r.witness.set("rankClause", rank_clause);
      out.push_back(std::move(r));
    }
  }

  if (wanted(only, CheckId::InducedSameRank)) {
    // One aggregated report per graph: the number of induced subgraphs grows
    // as 2^n, so only counts and the first failure are kept.
    std::uint64_t examined = 0, met = 0;
    std::optional<std::pair<VertexMask, Inertia>> failure;
    auto visit = [&](VertexMask sub) {
      ++examined;
      const Inertia in_h = induced_inertia(g, sub);
      if (in_h.rank() != in_g.rank()) return;
      ++met;
      if (in_h.signature() != s_g && !failure) failure = std::make_pair(sub, in_h);
    };
    const std::size_t n = g.order();
    std::string mode;
    if (n <= induced_subset_limit && n < 64) {
      mode = "all-induced";
      for (VertexMask sub = 0; sub < full; ++sub) visit(sub);
    } else {
      mode = "single-deletions";
      for (std::size_t v = 0; v < n; ++v) visit(full & ~bit(static_cast<Vertex>(v)));
    }
    Verdict v = met == 0 ? Verdict::Vacuous : (failure ? Verdict::Fail : Verdict::Pass);
    auto r = make_report(CheckId::InducedSameRank, g, v);
    r.witness.set("mode", mode).set("rG", in_g.rank()).set("sG", s_g);
    r.witness.set("examined", examined).set("hypothesisMet", met);
    if (failure) {
      r.witness.set("failingSubset", as_ints(to_set(failure->first)));
      r.witness.set("rH", failure->second.rank()).set("sH", failure->second.signature());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace siglab::detail
