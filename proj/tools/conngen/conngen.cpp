#include "conngen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <unordered_set>
#include <utility>

#include "siglab/error.hpp"
#include "siglab/structure.hpp"

namespace siglab::conngen {

namespace {

using Row = std::uint16_t;
using Cells = std::vector<Row>;  // ordered partition, one mask per cell

class Canonizer {
 public:
  Canonizer(const Row* rows, std::size_t n) : rows_(rows), n_(n) {}

  std::uint64_t run() {
    Cells start{static_cast<Row>((1U << n_) - 1)};
    if (n_ == 0) return 0;
    search(std::move(start));
    return best_;
  }

 private:
  // Split cells by neighbor counts into every cell until stable. Splits are
  // ordered by count vectors only, so the result is label-independent.
  void refine(Cells& cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      const Cells snapshot = cells;
      const std::size_t k = snapshot.size();
      Cells next;
      next.reserve(n_);
      std::array<std::pair<std::uint64_t, int>, 16> sig{};
      for (Row cell : snapshot) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        std::size_t count = 0;
        for (Row m = cell; m; m &= m - 1) {
          const int v = std::countr_zero(m);
          std::uint64_t s = 0;
          for (std::size_t c = 0; c < k; ++c) s = (s << 4) | static_cast<std::uint64_t>(std::popcount(static_cast<Row>(rows_[v] & snapshot[c])));
          sig[count++] = {s, v};
        }
        std::sort(sig.begin(), sig.begin() + static_cast<std::ptrdiff_t>(count));
        Row piece = 0;
        for (std::size_t i = 0; i < count; ++i) {
          if (i > 0 && sig[i].first != sig[i - 1].first) {
            next.push_back(piece);
            piece = 0;
            changed = true;
          }
          piece |= static_cast<Row>(1U << sig[i].second);
        }
        next.push_back(piece);
      }
      cells = std::move(next);
    }
  }

  bool twins(int u, int v) const {
    return (rows_[u] & ~(1U << v)) == (rows_[v] & ~(1U << u));
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (std::popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    // Twins in one cell are swapped by an automorphism fixing everything
    // else, so one representative per twin class suffices.
    std::vector<int> tried;
    for (Row m = cells[target]; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(static_cast<Row>(1U << v));
      child.push_back(static_cast<Row>(cells[target] & ~(1U << v)));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::array<int, 16> lab{};
    for (std::size_t i = 0; i < cells.size(); ++i) lab[i] = std::countr_zero(cells[i]);
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((rows_[lab[i]] >> lab[j]) & 1U);
    if (!have_best_ || code < best_) {
      best_ = code;
      have_best_ = true;
    }
  }

  const Row* rows_;
  std::size_t n_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

std::uint64_t code_of(const std::array<Row, 16>& rows, std::size_t n) { return Canonizer(rows.data(), n).run(); }

std::vector<Graph> extend(const std::vector<Graph>& smaller, std::size_t n, bool connected) {
  std::vector<Graph> out;
  std::unordered_set<std::uint64_t> seen;
  const Row subsets = static_cast<Row>(1U << (n - 1));
  std::array<Row, 16> rows{};
  for (const Graph& h : smaller) {
    for (Row s = connected ? 1 : 0; s < subsets; ++s) {
      for (std::size_t v = 0; v + 1 < n; ++v) {
        rows[v] = static_cast<Row>(h.neighbors(static_cast<Vertex>(v)) | (((s >> v) & 1U) << (n - 1)));
      }
      rows[n - 1] = s;
      if (!seen.insert(code_of(rows, n)).second) continue;
      std::vector<VertexMask> masks(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n));
      out.push_back(Graph::from_masks(std::move(masks)));
    }
  }
  return out;
}

void check_order(std::size_t n) {
  if (n > kMaxCanonicalOrder) {
    throw SizeLimitError("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  check_order(g.order());
  std::array<Row, 16> rows{};
  for (std::size_t v = 0; v < g.order(); ++v) rows[v] = static_cast<Row>(g.neighbors(static_cast<Vertex>(v)));
  return code_of(rows, g.order());
}

std::vector<Graph> all_graphs(std::size_t n) {
  check_order(n);
  std::vector<Graph> level{Graph(0)};
  for (std::size_t k = 1; k <= n; ++k) level = extend(level, k, false);
  return level;
}

// Every connected graph has a vertex whose removal keeps it connected, so
// extending connected graphs by a vertex with a nonempty neighborhood
// reaches every class.
std::vector<Graph> connected_graphs(std::size_t n) {
  check_order(n);
  if (n == 0) return {};
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) level = extend(level, k, true);
  return level;
}

}  // namespace siglab::conngen
