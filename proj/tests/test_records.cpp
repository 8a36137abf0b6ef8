#include <doctest.h>

#include "srdf/families.hpp"
#include "srdf/graph6.hpp"
#include "srdf/records.hpp"
#include "srdf/solver.hpp"

using namespace srdf;

TEST_CASE("construction records carry the family and exact gamma") {
  auto c = construct_wheel(12);
  auto r = make_record(c, FamilySpec::wheel(12));
  CHECK(r.family == "wheel(n=12)");
  CHECK(r.gamma == 1);
  CHECK(r.valid);
  CHECK(r.weight == 1);
  CHECK(parse_graph6(r.graph_id) == wheel_graph(12));
  auto j = to_json(r);
  CHECK(j["graph"] == r.graph_id);
  CHECK(j["values"] == format_values(c.labeling));
  CHECK(j["source"] == c.source);
  CHECK(j.dump() == to_json(make_record(construct_wheel(12), FamilySpec::wheel(12))).dump());
}

TEST_CASE("upper-bound records leave gamma empty") {
  auto r = make_record(construct_join_cycles_weight4(5, 6), FamilySpec::join_of_cycles(5, 6));
  CHECK_FALSE(r.gamma.has_value());
  CHECK(to_json(r)["gamma"].is_null());
  CHECK(r.weight == 4);
}

TEST_CASE("plain records re-derive validity") {
  auto r = make_record(cycle_graph(4), Labeling::uniform(4, -1), "manual");
  CHECK_FALSE(r.valid);
  CHECK(r.weight == -4);
  CHECK_FALSE(to_json(r).contains("family"));
}

TEST_CASE("report and solve result serialization") {
  auto j = to_json(verify(cycle_graph(4), Labeling::uniform(4, -1)));
  CHECK(j["valid"] == false);
  CHECK(j["condition_a_failures"].size() == 4);
  CHECK(j["closed_sums"] == nlohmann::json::array({-3, -3, -3, -3}));
  auto s = to_json(solve_exact(cycle_graph(3)));
  CHECK(s["gamma"] == 2);
  CHECK(s["method"] == "exhaustive");
}
