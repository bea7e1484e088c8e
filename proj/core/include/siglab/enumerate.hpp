#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "siglab/graph.hpp"
#include "siglab/transforms.hpp"

namespace siglab {

inline constexpr std::size_t kDefaultTreeCap = 14;

// One representative per isomorphism class of trees on n vertices, in a fixed
// order. Throws SizeLimitError for n > cap, InvalidArgument for n == 0.
std::vector<Graph> free_trees(std::size_t n, std::size_t cap = kDefaultTreeCap);

// Every free tree on n vertices plus each of its non-edges (unicyclic), and
// every such graph plus each further non-edge (bicyclic). Isomorphic
// duplicates are kept.
std::vector<Graph> unicyclic_from_trees(std::size_t n, std::size_t cap = kDefaultTreeCap);
std::vector<Graph> bicyclic_from_unicyclic(std::size_t n, std::size_t cap = kDefaultTreeCap);

// All (t, pendants) with 3 <= t <= t_max, 0 <= pendants[i] <= pendant_cap.
// Rotations and reflections are not folded.
std::vector<SunSpec> sun_grid(std::size_t t_max, std::size_t pendant_cap);

/// Line-oriented graph6 reader. Blank lines, '#' comments and a ">>graph6<<"
/// header are skipped.
class Graph6Reader {
 public:
  struct Record {
    std::size_t line = 0;  // 1-based
    Graph graph;
    std::string text;
  };
  struct Failure {
    std::size_t line = 0;
    std::size_t offset = 0;  // byte within the line
    std::string message;
  };
  using Item = std::variant<Record, Failure>;

  explicit Graph6Reader(std::istream& in, std::size_t max_order = kMaxOrder)
      : in_(in), max_order_(max_order) {}

  // nullopt at end of input.
  std::optional<Item> next();

 private:
  std::istream& in_;
  std::size_t max_order_;
  std::size_t line_ = 0;
};

struct IngestResult {
  std::vector<Graph6Reader::Record> graphs;
  std::vector<Graph6Reader::Failure> errors;
};

// strict: throws ParseError (message prefixed with the line number) at the
// first bad line. Otherwise bad lines are collected and skipped.
IngestResult ingest_graph6(std::istream& in, bool strict, std::size_t max_order = kMaxOrder);

/// A family member handed to the verification harness.
struct FamilyItem {
  Graph graph;
  std::string provenance;
  std::optional<SunSpec> sun;
};

enum class FamilyKind { Trees, Unicyclic, Bicyclic, Suns, Cycles };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Trees;
  std::size_t min_size = 1;
  std::size_t max_size = 1;
  std::size_t pendant_cap = 0;  // suns only
};

// "trees:2..10", "unicyclic:3..10", "bicyclic:4..9", "cycles:8..20",
// "suns:8,2" (t_max, pendant cap). A single number means lo == hi.
FamilySpec parse_family_spec(std::string_view text);
std::vector<FamilyItem> generate_family(const FamilySpec& spec);

}  // namespace siglab
