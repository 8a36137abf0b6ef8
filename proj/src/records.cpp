#include "srdf/records.hpp"

#include "srdf/graph6.hpp"

namespace srdf {

LabelingRecord make_record(const Graph& g, const Labeling& f, std::string source) {
  const auto report = verify(g, f);
  LabelingRecord r;
  r.graph_id = write_graph6(g);
  r.values = f;
  r.weight = report.weight;
  r.valid = report.valid;
  r.source = std::move(source);
  return r;
}

LabelingRecord make_record(const Construction& c, const std::optional<FamilySpec>& spec) {
  auto r = make_record(c.graph, c.labeling, c.source);
  if (spec)
    r.family = describe(*spec);
  if (c.claim_kind == ClaimKind::ExactValue)
    r.gamma = c.claimed_weight;
  return r;
}

nlohmann::json to_json(const LabelingRecord& record) {
  nlohmann::json j;
  j["graph"] = record.graph_id;
  if (record.family)
    j["family"] = *record.family;
  j["values"] = format_values(record.values);
  j["weight"] = record.weight;
  j["valid"] = record.valid;
  j["gamma"] = record.gamma ? nlohmann::json(*record.gamma) : nlohmann::json(nullptr);
  j["source"] = record.source;
  return j;
}

nlohmann::json to_json(const VerificationReport& report) {
  return {
      {"valid", report.valid},
      {"weight", report.weight},
      {"condition_a_failures", report.condition_a_failures},
      {"condition_b_failures", report.condition_b_failures},
      {"closed_sums", report.per_vertex_closed_sums},
  };
}

nlohmann::json to_json(const SolveResult& result) {
  return {
      {"gamma", result.gamma},
      {"witness", format_values(result.witness)},
      {"nodes", result.nodes_explored},
      {"method", to_string(result.method)},
  };
}

}  // namespace srdf
