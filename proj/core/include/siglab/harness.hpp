#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "siglab/census.hpp"
#include "siglab/enumerate.hpp"
#include "siglab/graph.hpp"
#include "siglab/transforms.hpp"

namespace siglab {

enum class CheckId {
  Conjecture,        // conjecture-1.1
  PathContraction,   // lemma-2.1
  SunNullity,        // lemma-2.2
  CutVertexRank,     // lemma-2.3
  VertexDeletion,    // lemma-2.4
  InducedSameRank,   // cor-2.5
  CutVertexFullRank, // cor-2.6
  CutVertexSplit,    // lemma-2.7
  CutVertexRaise,    // lemma-2.8
  CutVertexC5,       // cor-2.9
  LineFamilies,      // lemma-3.1
  LineTree,          // thm-3.2
  LineGraph,         // thm-3.3
  PowerCycles,       // lemma-4.1
  PowerTree,         // thm-4.2
  TotalTree,         // cor-4.3
  TotalEqSquare,     // total-eq-square
};

std::string_view to_string(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view text);
std::vector<CheckId> all_check_ids();
// Proved statements double as engine regression tests; only the open
// conjecture is a genuine search.
bool is_open_conjecture(CheckId id);

enum class Verdict { Pass, Fail, Vacuous, Skipped };
std::string_view to_string(Verdict v);

using WitnessValue = std::variant<std::int64_t, bool, std::string, std::vector<std::int64_t>>;

/// Ordered key/value record of the numbers that decided a verdict.
class Witness {
 public:
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Witness& set(std::string key, T value) {
    return set_value(std::move(key), WitnessValue{static_cast<std::int64_t>(value)});
  }
  Witness& set(std::string key, bool value) { return set_value(std::move(key), WitnessValue{value}); }
  Witness& set(std::string key, std::string value) {
    return set_value(std::move(key), WitnessValue{std::move(value)});
  }
  Witness& set(std::string key, const char* value) { return set(std::move(key), std::string(value)); }
  Witness& set(std::string key, std::vector<std::int64_t> value) {
    return set_value(std::move(key), WitnessValue{std::move(value)});
  }

  const WitnessValue* find(std::string_view key) const;
  const std::vector<std::pair<std::string, WitnessValue>>& entries() const { return entries_; }

 private:
  Witness& set_value(std::string key, WitnessValue value);

  std::vector<std::pair<std::string, WitnessValue>> entries_;
};

struct CheckReport {
  CheckId check = CheckId::Conjecture;
  std::string graph6;
  std::string provenance;
  Verdict verdict = Verdict::Vacuous;
  Witness witness;
};

struct CheckOptions {
  std::uint64_t budget = kDefaultCycleBudget;
  std::vector<std::size_t> powers{2, 3};
  // cor-2.5 visits every induced subgraph up to this order, only single
  // vertex deletions beyond it.
  std::size_t induced_subset_limit = 10;
};

CheckReport check_conjecture(const Graph& g, std::uint64_t budget = kDefaultCycleBudget);

/// Cyclic zero-run structure of a pendant pattern.
struct ZeroChainProfile {
  std::vector<bool> nonzero;
  struct Run {
    std::size_t start = 0;
    std::size_t length = 0;
  };
  // Maximal cyclic zero runs bounded by nonzero entries; empty when m == 0.
  std::vector<Run> chains;
  std::size_t m = 0;
};

ZeroChainProfile zero_chain_profile(const SunSpec& spec);
// Nullity of the line graph of the sun graph, predicted combinatorially.
std::size_t predict_sun_nullity(const SunSpec& spec);
CheckReport check_sun_nullity(const SunSpec& spec);

// Cut-vertex rank/signature calculus (lemma-2.3, cor-2.6, lemma-2.7,
// lemma-2.8, cor-2.9): one report per (cut vertex, component, statement) or
// per cut vertex where the statement quantifies over all components.
std::vector<CheckReport> check_cut_vertex_laws(const Graph& g,
                                               std::uint64_t budget = kDefaultCycleBudget);
// lemma-2.4 for every vertex and cor-2.5 for induced subgraphs.
std::vector<CheckReport> check_vertex_deletion_laws(const Graph& g,
                                                    std::size_t induced_subset_limit = 10);
std::vector<CheckReport> check_path_contraction(const Graph& g);

// thm-3.3 on L_g; a tree input is reported under thm-3.2 instead.
CheckReport check_line_graph_theorems(const Graph& g, std::uint64_t budget = kDefaultCycleBudget);

// Whether g is one of the small families whose line graphs are settled
// directly (a cycle plus two pendant edges, two cycles sharing a vertex, two
// cycles sharing a path), every cycle of length 2 (mod 4).
bool is_line_family_representative(const Graph& g);
CheckReport check_line_families(const Graph& g, std::uint64_t budget = kDefaultCycleBudget);

struct NamedGraph {
  std::string name;
  Graph graph;
};
std::vector<NamedGraph> line_family_representatives();

// thm-4.2 on tree^k plus lemma-4.1 on every vertex when the tree has at
// least five vertices. Throws InvalidArgument if tree is not a tree or k < 2.
std::vector<CheckReport> check_power_tree_theorems(const Graph& tree, std::size_t k,
                                                   std::uint64_t budget = kDefaultCycleBudget);
// lemma-4.1 alone on a connected graph.
CheckReport check_power_cycles(const Graph& g, std::size_t k);

// total-eq-square and cor-4.3. Throws InvalidArgument if tree is not a tree.
std::vector<CheckReport> check_total_graph(const Graph& tree,
                                           std::uint64_t budget = kDefaultCycleBudget);

// Dispatch one check on one family item; returns only reports for id.
std::vector<CheckReport> run_check(CheckId id, const FamilyItem& item, const CheckOptions& options);

struct Summary {
  std::uint64_t items = 0;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t skipped = 0;
  std::uint64_t errors = 0;

  void add(Verdict v);
  Summary& operator+=(const Summary& other);
};

struct SearchResult {
  Summary summary;
  std::vector<CheckReport> failures;
  // Items the check could not be run on (e.g. a derived graph over the order
  // cap), as "provenance: message".
  std::vector<std::string> errors;
};

using ItemSource = std::function<std::optional<FamilyItem>()>;
using ReportSink = std::function<void(const CheckReport&)>;

// Applies id to every item. Reports reach sink in input order whatever the
// number of jobs.
SearchResult search_counterexamples(const ItemSource& source, CheckId id,
                                    const CheckOptions& options, std::size_t jobs = 1,
                                    const ReportSink& sink = {});
SearchResult search_counterexamples(std::span<const FamilyItem> items, CheckId id,
                                    const CheckOptions& options, std::size_t jobs = 1,
                                    const ReportSink& sink = {});

}  // namespace siglab
