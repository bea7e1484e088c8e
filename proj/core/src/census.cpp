#include "siglab/census.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "siglab/error.hpp"

namespace siglab {

namespace {

struct BudgetExhausted {};
struct TargetsMet {};

// Backtracking over simple paths that start at the cycle's minimum vertex and
// stay above it. A closed path is counted only when its second vertex is
// smaller than its last, which fixes one orientation per cycle.
class CycleCounter {
 public:
  CycleCounter(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}
  CycleCounter(const Graph& g, std::uint64_t budget, std::uint64_t need3, std::uint64_t need5)
      : g_(g), budget_(budget), need3_(need3), need5_(need5), targeted_(true) {}

  void run() {
    const std::size_t n = g_.order();
    for (std::size_t r = 0; r < n; ++r) {
      root_ = static_cast<Vertex>(r);
      allowed_ = g_.vertex_mask() & ~((bit(root_) << 1) - 1);
      const VertexMask first = g_.neighbors(root_) & allowed_;
      for (VertexMask m = first; m; m &= m - 1) {
        const auto u = static_cast<Vertex>(std::countr_zero(m));
        extend(u, bit(root_) | bit(u), 2, u);
      }
    }
  }

  std::array<std::uint64_t, kMaxOrder + 1> counts{};
  std::uint64_t total = 0;

 private:
  void extend(Vertex v, VertexMask visited, std::size_t len, Vertex second) {
    for (VertexMask m = g_.neighbors(v) & allowed_ & ~visited; m; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      if (second < u && g_.adjacent(u, root_)) {
        if (++total > budget_) throw BudgetExhausted{};
        ++counts[len + 1];
        if (targeted_) {
          const std::size_t r = (len + 1) % 4;
          if (r == 3 && need3_ > 0) --need3_;
          if (r == 1 && need5_ > 0) --need5_;
          if (need3_ == 0 && need5_ == 0) throw TargetsMet{};
        }
      }
      extend(u, visited | bit(u), len + 1, second);
    }
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t need3_ = 0;
  std::uint64_t need5_ = 0;
  bool targeted_ = false;
  Vertex root_ = 0;
  VertexMask allowed_ = 0;
};

CycleCensus tally(const CycleCounter& counter, CycleCensus c) {
  for (std::size_t len = 3; len <= kMaxOrder; ++len) {
    const std::uint64_t k = counter.counts[len];
    if (k == 0) continue;
    c.by_length[len] = k;
    c.total += k;
    if (len % 4 == 3) c.c3 += k;
    if (len % 4 == 1) c.c5 += k;
  }
  c.c1 = c.c3 + c.c5;
  return c;
}

}  // namespace

CycleCensus census(const Graph& g, std::uint64_t budget) {
  CycleCounter counter(g, budget);
  CycleCensus c;
  try {
    counter.run();
  } catch (const BudgetExhausted&) {
    c.budget_exceeded = true;
  }
  return tally(counter, c);
}

CycleCensus census_until(const Graph& g, std::uint64_t c3_target, std::uint64_t c5_target, std::uint64_t budget) {
  CycleCensus c;
  if (c3_target == 0 && c5_target == 0) {
    c.stopped_at_target = true;
    return c;
  }
  CycleCounter counter(g, budget, c3_target, c5_target);
  try {
    counter.run();
  } catch (const BudgetExhausted&) {
    c.budget_exceeded = true;
  } catch (const TargetsMet&) {
    c.stopped_at_target = true;
  }
  return tally(counter, c);
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const Graph& g, Vertex v, std::span<const CycleTarget> targets)
      : g_(g), v_(v), targets_(targets), found_(targets.size(), false) {
    for (const auto& t : targets) {
      if (t.kind == CycleTarget::Kind::ResidueMod4) {
        max_len_ = g.order();
        break;
      }
      max_len_ = std::max(max_len_, std::min(t.value, g.order()));
    }
    remaining_ = targets.size();
  }

  std::vector<bool> run() {
    if (remaining_ > 0) extend(v_, bit(v_), 1);
    return found_;
  }

 private:
  bool record(std::size_t len) {
    for (std::size_t i = 0; i < targets_.size(); ++i) {
      if (found_[i]) continue;
      const auto& t = targets_[i];
      const bool hit = t.kind == CycleTarget::Kind::ExactLength ? len == t.value : len % 4 == t.value;
      if (hit) {
        found_[i] = true;
        --remaining_;
      }
    }
    return remaining_ == 0;
  }

  // Returns true once every target has a witness.
  bool extend(Vertex x, VertexMask visited, std::size_t len) {
    if (len >= max_len_) return false;
    for (VertexMask m = g_.neighbors(x) & ~visited; m; m &= m - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(m));
      if (len + 1 >= 3 && g_.adjacent(u, v_) && record(len + 1)) return true;
      if (extend(u, visited | bit(u), len + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  Vertex v_;
  std::span<const CycleTarget> targets_;
  std::vector<bool> found_;
  std::size_t remaining_ = 0;
  std::size_t max_len_ = 0;
};

}  // namespace

std::vector<bool> cycles_through_vertex(const Graph& g, Vertex v, std::span<const CycleTarget> targets) {
  if (v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return WitnessSearch(g, v, targets).run();
}

}  // namespace siglab
