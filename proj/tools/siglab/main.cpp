// siglab: signature, cycle census and verification runs over graph6 streams.
//
// Exit status: 0 success, 1 some check failed (verify only), 2 operational
// error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "siglab/census.hpp"
#include "siglab/enumerate.hpp"
#include "siglab/error.hpp"
#include "siglab/graph6.hpp"
#include "siglab/harness.hpp"
#include "siglab/inertia.hpp"
#include "siglab/report.hpp"
#include "siglab/transforms.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string input_path;
  bool use_stdin = false;
  std::string family;
  std::string format = "table";
  std::uint64_t budget = siglab::kDefaultCycleBudget;
  std::size_t jobs = 1;
  bool strict = false;
};

// Graph6 input from a file or standard input.
class InputStream {
 public:
  explicit InputStream(const RunConfig& cfg) {
    if (!cfg.input_path.empty()) {
      file_ = std::make_unique<std::ifstream>(cfg.input_path);
      if (!*file_) throw siglab::Error("cannot open " + cfg.input_path);
      reader_.emplace(*file_);
    } else {
      reader_.emplace(std::cin);
    }
  }

  // Next graph; strict mode throws on a bad line, lenient mode reports it on
  // stderr and moves on.
  std::optional<siglab::Graph6Reader::Record> next(bool strict, std::uint64_t* errors = nullptr) {
    while (auto item = reader_->next()) {
      if (auto* rec = std::get_if<siglab::Graph6Reader::Record>(&*item)) return std::move(*rec);
      const auto& f = std::get<siglab::Graph6Reader::Failure>(*item);
      if (strict) throw siglab::ParseError("line " + std::to_string(f.line) + ": " + f.message, f.offset);
      std::cerr << "siglab: skipping line " << f.line << ": " << f.message << '\n';
      if (errors) ++*errors;
    }
    return std::nullopt;
  }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::optional<siglab::Graph6Reader> reader_;
};

void add_input_options(CLI::App* cmd, RunConfig& cfg, bool allow_family) {
  auto* input = cmd->add_option("--input", cfg.input_path, "graph6 file, one graph per line");
  auto* in_stdin = cmd->add_flag("--stdin", cfg.use_stdin, "read graph6 from standard input");
  input->excludes(in_stdin);
  if (allow_family) {
    auto* fam = cmd->add_option("--family", cfg.family,
                                "generated family: trees:A..B, unicyclic:A..B, bicyclic:A..B, cycles:A..B, suns:TMAX,CAP");
    fam->excludes(input)->excludes(in_stdin);
  }
  cmd->add_option("--format", cfg.format, "table or jsonl")->check(CLI::IsMember({"table", "jsonl"}));
  cmd->add_option("--budget", cfg.budget, "cycle census budget")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--strict", cfg.strict, "abort on the first malformed line");
}

int cmd_inertia(const RunConfig& cfg) {
  InputStream in(cfg);
  if (cfg.format == "table") std::cout << "graph6\tn\tedges\tp\tneg\teta\tr\ts\n";
  while (auto rec = in.next(cfg.strict)) {
    const auto inertia = siglab::inertia(rec->graph);
    if (cfg.format == "jsonl") {
      std::cout << siglab::inertia_json_line(rec->text, rec->graph, inertia) << '\n';
    } else {
      std::cout << rec->text << '\t' << rec->graph.order() << '\t' << rec->graph.edge_count() << '\t'
                << inertia.positive << '\t' << inertia.negative << '\t' << inertia.nullity << '\t'
                << inertia.rank() << '\t' << inertia.signature() << '\n';
    }
  }
  return kExitOk;
}

int cmd_census(const RunConfig& cfg) {
  InputStream in(cfg);
  if (cfg.format == "table") std::cout << "graph6\tbyLength\tc3\tc5\tc1\tbudgetExceeded\n";
  while (auto rec = in.next(cfg.strict)) {
    const auto c = siglab::census(rec->graph, cfg.budget);
    if (cfg.format == "jsonl") {
      std::cout << siglab::census_json_line(rec->text, c) << '\n';
      continue;
    }
    std::string hist;
    for (const auto& [len, count] : c.by_length) {
      hist += (hist.empty() ? "" : ",") + std::to_string(len) + ":" + std::to_string(count);
    }
    std::cout << rec->text << '\t' << (hist.empty() ? "-" : hist) << '\t' << c.c3 << '\t' << c.c5 << '\t' << c.c1
              << '\t' << (c.budget_exceeded ? "yes" : "no") << '\n';
  }
  return kExitOk;
}

// "sun:4,[1,0,1,0]" or "sun:4,1,0,1,0".
siglab::SunSpec parse_sun(const std::string& text) {
  std::string body = text.substr(4);
  std::erase(body, '[');
  std::erase(body, ']');
  std::stringstream ss(body);
  std::string tok;
  std::vector<std::size_t> values;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      values.push_back(std::stoul(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw siglab::InvalidArgument("bad sun parameter '" + tok + "'");
    }
  }
  if (values.empty()) throw siglab::InvalidArgument("sun needs t and pendant counts");
  siglab::SunSpec spec{values.front(), {values.begin() + 1, values.end()}};
  siglab::validate(spec);
  return spec;
}

int cmd_transform(const RunConfig& cfg, const std::string& which) {
  if (which.starts_with("sun:")) {
    std::cout << siglab::to_graph6(siglab::sun(parse_sun(which))) << '\n';
    return kExitOk;
  }
  std::function<siglab::Graph(const siglab::Graph&)> op;
  if (which == "line") {
    op = [](const siglab::Graph& g) { return siglab::line_graph(g); };
  } else if (which == "subdivide") {
    op = [](const siglab::Graph& g) { return siglab::subdivision(g); };
  } else if (which == "total") {
    op = [](const siglab::Graph& g) { return siglab::total_graph(g); };
  } else if (which.starts_with("power:")) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(which.substr(6), &used);
      if (used != which.size() - 6) throw std::invalid_argument(which);
    } catch (const std::exception&) {
      throw siglab::InvalidArgument("bad power exponent in '" + which + "'");
    }
    if (k < 1) throw siglab::InvalidArgument("power exponent must be at least 1");
    op = [k](const siglab::Graph& g) { return siglab::power(g, k); };
  } else {
    throw siglab::InvalidArgument("unknown transform '" + which + "'");
  }
  InputStream in(cfg);
  while (auto rec = in.next(cfg.strict)) std::cout << siglab::to_graph6(op(rec->graph)) << '\n';
  return kExitOk;
}

int cmd_reduce(const RunConfig& cfg) {
  InputStream in(cfg);
  while (auto rec = in.next(cfg.strict)) {
    const auto red = siglab::reduce_fully(rec->graph);
    std::cout << siglab::to_graph6(red.graph) << '\t' << red.steps << '\n';
  }
  return kExitOk;
}

std::vector<std::size_t> parse_powers(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw siglab::InvalidArgument("bad power list '" + text + "'");
    }
  }
  return out;
}

int cmd_verify(const RunConfig& cfg, const std::string& check_name, const std::string& powers, bool fails_only) {
  const auto id = siglab::parse_check_id(check_name);
  if (!id) throw siglab::InvalidArgument("unknown check id '" + check_name + "'");
  siglab::CheckOptions options;
  options.budget = cfg.budget;
  options.powers = parse_powers(powers);

  const bool jsonl = cfg.format == "jsonl";
  auto sink = [&](const siglab::CheckReport& r) {
    if (fails_only && r.verdict != siglab::Verdict::Fail) return;
    if (jsonl) {
      std::cout << siglab::to_json_line(r) << '\n';
    } else {
      std::cout << siglab::to_string(r.check) << '\t' << siglab::to_string(r.verdict) << '\t' << r.graph6 << '\t'
                << r.provenance << '\n';
    }
  };

  siglab::SearchResult result;
  std::uint64_t input_errors = 0;
  if (!cfg.family.empty()) {
    const auto items = siglab::generate_family(siglab::parse_family_spec(cfg.family));
    result = siglab::search_counterexamples(std::span<const siglab::FamilyItem>(items), *id, options, cfg.jobs, sink);
  } else {
    InputStream in(cfg);
    siglab::ItemSource source = [&]() -> std::optional<siglab::FamilyItem> {
      auto rec = in.next(cfg.strict, &input_errors);
      if (!rec) return std::nullopt;
      return siglab::FamilyItem{std::move(rec->graph), "line:" + std::to_string(rec->line), std::nullopt};
    };
    result = siglab::search_counterexamples(source, *id, options, cfg.jobs, sink);
  }
  result.summary.errors += input_errors;
  for (const auto& e : result.errors) std::cerr << "siglab: " << e << '\n';

  if (jsonl) {
    std::cout << siglab::summary_json_line(result.summary, *id) << '\n';
  } else {
    const auto& s = result.summary;
    std::cout << "summary " << check_name << ": items=" << s.items << " pass=" << s.pass << " fail=" << s.fail
              << " vacuous=" << s.vacuous << " skipped=" << s.skipped << " errors=" << s.errors << '\n';
  }
  if (result.summary.fail > 0) return kExitCheckFailed;
  if (!result.errors.empty()) return kExitError;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"siglab: exact graph signatures, cycle census and verification runs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* inertia_cmd = app.add_subcommand("inertia", "positive/negative/zero eigenvalue counts per graph");
  add_input_options(inertia_cmd, cfg, false);

  auto* census_cmd = app.add_subcommand("census", "cycle counts by length and by length mod 4");
  add_input_options(census_cmd, cfg, false);

  std::string which;
  auto* transform_cmd = app.add_subcommand("transform", "line | power:K | subdivide | total | sun:T,[n1,...]");
  transform_cmd->add_option("which", which, "transform")->required();
  add_input_options(transform_cmd, cfg, false);

  auto* reduce_cmd = app.add_subcommand("reduce", "contract degree-2 paths of four vertices to a fixed point");
  add_input_options(reduce_cmd, cfg, false);

  std::string check_name;
  std::string powers = "2,3";
  bool fails_only = false;
  std::string trees, unicyclic, bicyclic, cycles, suns;
  auto* verify_cmd = app.add_subcommand("verify", "run a check over a family or graph6 stream");
  verify_cmd->add_option("check", check_name, "check id, e.g. conjecture-1.1, thm-3.2")->required();
  add_input_options(verify_cmd, cfg, true);
  verify_cmd->add_option("--powers", powers, "comma-separated exponents for power checks");
  verify_cmd->add_flag("--fails-only", fails_only, "print only failing reports (summary always printed)");
  verify_cmd->add_option("--trees", trees, "shorthand for --family trees:RANGE");
  verify_cmd->add_option("--unicyclic", unicyclic, "shorthand for --family unicyclic:RANGE");
  verify_cmd->add_option("--bicyclic", bicyclic, "shorthand for --family bicyclic:RANGE");
  verify_cmd->add_option("--cycles", cycles, "shorthand for --family cycles:RANGE");
  verify_cmd->add_option("--suns", suns, "shorthand for --family suns:TMAX,CAP");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*inertia_cmd) return cmd_inertia(cfg);
    if (*census_cmd) return cmd_census(cfg);
    if (*transform_cmd) return cmd_transform(cfg, which);
    if (*reduce_cmd) return cmd_reduce(cfg);
    if (*verify_cmd) {
      for (const auto& [name, value] : {std::pair<std::string, std::string>{"trees", trees},
                                        {"unicyclic", unicyclic},
                                        {"bicyclic", bicyclic},
                                        {"cycles", cycles},
                                        {"suns", suns}}) {
        if (value.empty()) continue;
        if (!cfg.family.empty()) throw siglab::InvalidArgument("only one family may be given");
        cfg.family = name + ":" + value;
      }
      return cmd_verify(cfg, check_name, powers, fails_only);
    }
  } catch (const siglab::Error& e) {
    std::cerr << "siglab: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
