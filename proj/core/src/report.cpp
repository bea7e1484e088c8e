#include "siglab/report.hpp"

#include <json.hpp>

namespace siglab {

namespace {

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, value] : w.entries()) {
    std::visit([&](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

}  // namespace

std::string to_json_line(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["checkId"] = to_string(report.check);
  j["checkClass"] = is_open_conjecture(report.check) ? "conjecture" : "theorem";
  j["graph6"] = report.graph6;
  j["provenance"] = report.provenance;
  j["verdict"] = to_string(report.verdict);
  j["witness"] = witness_json(report.witness);
  return j.dump();
}

std::string summary_json_line(const Summary& s, CheckId id) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["summary"] = {
      {"checkId", to_string(id)}, {"items", s.items},     {"pass", s.pass},       {"fail", s.fail},
      {"vacuous", s.vacuous},     {"skipped", s.skipped}, {"errors", s.errors},
  };
  return j.dump();
}

std::string inertia_json_line(const std::string& graph6, const Graph& g, const Inertia& in) {
  nlohmann::ordered_json j;
  j["graph6"] = graph6;
  j["order"] = g.order();
  j["edges"] = g.edge_count();
  j["p"] = in.positive;
  j["n"] = in.negative;
  j["eta"] = in.nullity;
  j["r"] = in.rank();
  j["s"] = in.signature();
  return j.dump();
}

std::string census_json_line(const std::string& graph6, const CycleCensus& c) {
  nlohmann::ordered_json j;
  j["graph6"] = graph6;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [len, count] : c.by_length) hist[std::to_string(len)] = count;
  j["byLength"] = hist;
  j["c3"] = c.c3;
  j["c5"] = c.c5;
  j["c1"] = c.c1;
  j["total"] = c.total;
  j["budgetExceeded"] = c.budget_exceeded;
  return j.dump();
}

}  // namespace siglab
