#pragma once

#include "srdf/families.hpp"
#include "srdf/labeling.hpp"
#include "srdf/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace srdf {

/// One labeled graph as printed by `solve` and `construct`. graph_id is the
/// graph6 line, so a record can be fed straight back to `verify`.
struct LabelingRecord {
  std::string graph_id;
  std::optional<std::string> family;
  Labeling values;
  int weight = 0;
  bool valid = false;
  std::optional<int> gamma;
  std::string source;
};

LabelingRecord make_record(const Graph& g, const Labeling& f, std::string source);
LabelingRecord make_record(const Construction& c, const std::optional<FamilySpec>& spec);

nlohmann::json to_json(const LabelingRecord& record);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const SolveResult& result);

}  // namespace srdf
