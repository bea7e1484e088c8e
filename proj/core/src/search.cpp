#include <atomic>
#include <thread>

#include "siglab/error.hpp"
#include "siglab/harness.hpp"

namespace siglab {

namespace {

struct Outcome {
  std::vector<CheckReport> reports;
  std::string error;
};

Outcome run_one(CheckId id, const FamilyItem& item, const CheckOptions& options) {
  Outcome o;
  try {
    o.reports = run_check(id, item, options);
  } catch (const Error& e) {
    o.error = (item.provenance.empty() ? std::string("item") : item.provenance) + ": " + e.what();
  }
  return o;
}

void run_batch(std::vector<FamilyItem>& batch, std::vector<Outcome>& outcomes, CheckId id,
               const CheckOptions& options, std::size_t jobs) {
  outcomes.assign(batch.size(), {});
  if (jobs <= 1 || batch.size() <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) outcomes[i] = run_one(id, batch[i], options);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t w = 0; w < std::min(jobs, batch.size()); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) outcomes[i] = run_one(id, batch[i], options);
    });
  }
}

}  // namespace

SearchResult search_counterexamples(const ItemSource& source, CheckId id, const CheckOptions& options,
                                    std::size_t jobs, const ReportSink& sink) {
  SearchResult result;
  const std::size_t batch_size = 256 * std::max<std::size_t>(jobs, 1);
  std::vector<FamilyItem> batch;
  std::vector<Outcome> outcomes;
  bool exhausted = false;
  while (!exhausted) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto item = source();
      if (!item) {
        exhausted = true;
        break;
      }
      batch.push_back(std::move(*item));
    }
    run_batch(batch, outcomes, id, options, jobs);
    // Emission is sequential, so sink order follows input order.
    for (auto& o : outcomes) {
      ++result.summary.items;
      if (!o.error.empty()) {
        ++result.summary.errors;
        result.errors.push_back(std::move(o.error));
        continue;
      }
      for (auto& r : o.reports) {
        result.summary.add(r.verdict);
        if (sink) sink(r);
        if (r.verdict == Verdict::Fail) result.failures.push_back(std::move(r));
      }
    }
  }
  return result;
}

SearchResult search_counterexamples(std::span<const FamilyItem> items, CheckId id, const CheckOptions& options,
                                    std::size_t jobs, const ReportSink& sink) {
  std::size_t next = 0;
  ItemSource source = [&]() -> std::optional<FamilyItem> {
    if (next >= items.size()) return std::nullopt;
    return items[next++];
  };
  return search_counterexamples(source, id, options, jobs, sink);
}

}  // namespace siglab
