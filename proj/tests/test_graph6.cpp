#include <doctest.h>

#include <string>
#include <vector>

#include "oracles.hpp"
#include "srdf/graph.hpp"
#include "srdf/graph6.hpp"

using namespace srdf;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Graph6Error& e) {
    return e.offset();
  }
  FAIL("expected a graph6 error for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_CASE("graph6 reference strings") {
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("B?") == empty_graph(3));
  CHECK(parse_graph6("@") == empty_graph(1));
  CHECK(parse_graph6("?") == empty_graph(0));
  CHECK(parse_graph6("Dhc") == cycle_graph(5));
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  CHECK(write_graph6(empty_graph(3)) == "B?");
  CHECK(write_graph6(empty_graph(1)) == "@");
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
}

TEST_CASE("graph6 header and line endings are accepted") {
  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
  CHECK(parse_graph6("Bw\n") == complete_graph(3));
  CHECK(parse_graph6(">>graph6<<Dhc\r\n") == cycle_graph(5));
}

TEST_CASE("graph6 errors carry the byte offset") {
  CHECK(error_offset("") == 0);
  CHECK(error_offset("B w") == 1);
  CHECK(error_offset("D\x01") == 1);
  CHECK(error_offset("D") == 1);
  CHECK(error_offset("Dh") == 2);
  CHECK(error_offset("Dhcc") == 3);
  // "Bx": the third pair bit is set and the remaining padding bit is 1.
  CHECK(error_offset("Bx") == 1);
  CHECK(error_offset("~??}") == 1);
  CHECK(error_offset("~~??????") == 1);
  CHECK_THROWS_AS(parse_graph6("~"), Graph6Error);
}

TEST_CASE("graph6 multi-byte order encodings") {
  Graph big = empty_graph(63);
  std::string text = write_graph6(big);
  CHECK(text.substr(0, 4) == "~??~");
  CHECK(parse_graph6(text) == big);
  Graph wide = wheel_graph(300);
  CHECK(write_graph6(wide).substr(0, 4) == "~?Cl");
  CHECK(parse_graph6(write_graph6(wide)) == wide);
  CHECK(error_offset("~~?~??????") == 0);
}

TEST_CASE("graph6 round-trips family graphs") {
  std::vector<Graph> graphs;
  for (int n = 1; n <= 70; ++n) {
    graphs.push_back(path_graph(n));
    graphs.push_back(complete_graph(n));
    graphs.push_back(fan_graph(n));
    if (n >= 3) {
      graphs.push_back(cycle_graph(n));
      graphs.push_back(wheel_graph(n));
    }
  }
  graphs.push_back(join_of_cycles(40, 60));
  graphs.push_back(wheel_graph(500));
  for (const Graph& g : graphs) {
    auto text = write_graph6(g);
    CHECK(parse_graph6(text) == g);
    CHECK(write_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("graph6 agrees with a reference encoder corpus") {
  auto corpus = oracle::load_graph6_corpus(std::string(SRDF_TEST_DATA_DIR) + "/graph6_corpus.tsv");
  REQUIRE(corpus.size() >= 500);
  for (const auto& e : corpus) {
    Graph expected = Graph::from_edges(e.order, e.edges);
    Graph parsed = parse_graph6(e.graph6);
    CHECK(parsed == expected);
    CHECK(write_graph6(expected) == e.graph6);
  }
}
