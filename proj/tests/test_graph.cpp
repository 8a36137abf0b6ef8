#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "srdf/graph.hpp"

using namespace srdf;

namespace {

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  return d;
}

std::vector<int> sorted_degrees(const Graph& g) {
  auto d = degrees(g);
  std::sort(d.begin(), d.end());
  return d;
}

void check_simple(const Graph& g) {
  std::size_t twice_edges = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nbrs = g.neighbors(v);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
    for (Vertex u : nbrs) {
      CHECK(u != v);
      CHECK(g.has_edge(u, v));
    }
    twice_edges += nbrs.size();
  }
  CHECK(twice_edges == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("from_edges collapses duplicates and rejects loops and bad endpoints") {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 0}, {1, 2}};
  Graph g = Graph::from_edges(3, edges);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));

  std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), ParameterError);
  std::vector<std::pair<Vertex, Vertex>> outside{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, outside), ParameterError);
  CHECK_THROWS_AS(g.neighbors(3), ParameterError);
}

TEST_CASE("family generators produce the expected graphs") {
  Graph c5 = generate(FamilySpec::cycle(5));
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(degrees(c5) == std::vector<int>(5, 2));
  CHECK(c5.has_edge(0, 4));

  Graph fr2 = generate(FamilySpec::friendship(2));
  CHECK(fr2.order() == 5);
  CHECK(fr2.edge_count() == 6);
  CHECK(degrees(fr2) == std::vector<int>{4, 2, 2, 2, 2});

  Graph w4 = generate(FamilySpec::wheel(4));
  CHECK(w4.order() == 5);
  CHECK(w4.edge_count() == 8);
  CHECK(degrees(w4) == std::vector<int>{4, 3, 3, 3, 3});

  Graph p4 = generate(FamilySpec::path(4));
  CHECK(degrees(p4) == std::vector<int>{1, 2, 2, 1});
  CHECK(p4.edge_count() == 3);

  Graph f3 = generate(FamilySpec::fan(3));
  CHECK(degrees(f3) == std::vector<int>{3, 2, 3, 2});

  CHECK(generate(FamilySpec::empty(0)).order() == 0);
  CHECK(generate(FamilySpec::empty(4)).edge_count() == 0);
  CHECK(generate(FamilySpec::complete(6)).edge_count() == 15);
  CHECK(generate(FamilySpec::matching(3)).edge_count() == 3);
  CHECK(generate(FamilySpec::join_of_cycles(3, 4)).edge_count() == 3 + 4 + 12);
}

TEST_CASE("join examples") {
  CHECK(join(complete_graph(3), complete_graph(3)) == complete_graph(6));
  Graph w5 = join(complete_graph(1), cycle_graph(5));
  CHECK(w5 == wheel_graph(5));
  CHECK(w5.edge_count() == 10);
  CHECK(join(empty_graph(0), cycle_graph(4)) == cycle_graph(4));
  CHECK(join(cycle_graph(4), empty_graph(0)) == cycle_graph(4));
}

TEST_CASE("hub families equal the corresponding joins with a single vertex") {
  for (int n = 3; n <= 20; ++n) CHECK(wheel_graph(n) == join(complete_graph(1), cycle_graph(n)));
  for (int n = 1; n <= 20; ++n) CHECK(fan_graph(n) == join(complete_graph(1), path_graph(n)));
  for (int m = 1; m <= 10; ++m) CHECK(friendship_graph(m) == join(complete_graph(1), matching_copies(m)));
  for (int m = 3; m <= 8; ++m)
    for (int n = 3; n <= 8; ++n) CHECK(join_of_cycles(m, n) == join(cycle_graph(m), cycle_graph(n)));
}

TEST_CASE("closed neighborhoods") {
  CHECK(closed_neighborhood(path_graph(4), 0) == std::vector<Vertex>{0, 1});
  CHECK(closed_neighborhood(path_graph(4), 2) == std::vector<Vertex>{1, 2, 3});
  CHECK(closed_neighborhood(cycle_graph(5), 0) == std::vector<Vertex>{0, 1, 4});
  CHECK(closed_neighborhood(complete_graph(4), 2) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(closed_neighborhood(empty_graph(3), 1) == std::vector<Vertex>{1});
  CHECK(closed_neighborhood(wheel_graph(4), 0) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(closed_neighborhood(path_graph(4), 4), ParameterError);
  CHECK_THROWS_AS(closed_neighborhood(path_graph(4), -1), ParameterError);
}

TEST_CASE("max degree and universal vertices") {
  CHECK(max_degree(wheel_graph(4)) == 4);
  CHECK(max_degree(wheel_graph(6)) == 6);
  CHECK(has_universal_vertex(wheel_graph(6)));
  CHECK(max_degree(cycle_graph(6)) == 2);
  CHECK_FALSE(has_universal_vertex(cycle_graph(6)));
  Graph c4c4 = join(cycle_graph(4), cycle_graph(4));
  CHECK(c4c4.order() == 8);
  CHECK(max_degree(c4c4) == 6);
  CHECK_FALSE(has_universal_vertex(c4c4));
  CHECK(max_degree(empty_graph(3)) == 0);
  CHECK(max_degree(complete_graph(1)) == 0);
  CHECK_THROWS_AS(max_degree(empty_graph(0)), ParameterError);

  CHECK(has_universal_vertex(complete_graph(1)));
  CHECK(has_universal_vertex(fan_graph(7)));
  CHECK(has_universal_vertex(friendship_graph(3)));
  CHECK(has_universal_vertex(cycle_graph(3)));
  CHECK_FALSE(has_universal_vertex(cycle_graph(4)));
  CHECK_FALSE(has_universal_vertex(empty_graph(2)));
  CHECK_FALSE(has_universal_vertex(empty_graph(0)));
}

TEST_CASE("generators reject out-of-range parameters and name the bound") {
  auto message = [](const FamilySpec& spec) {
    try {
      validate(spec);
    } catch (const ParameterError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(FamilySpec::cycle(2)).find("n >= 3") != std::string::npos);
  CHECK(message(FamilySpec::wheel(2)).find("n >= 3") != std::string::npos);
  CHECK(message(FamilySpec::path(0)).find("n >= 1") != std::string::npos);
  CHECK(message(FamilySpec::friendship(0)).find("m >= 1") != std::string::npos);
  CHECK(message(FamilySpec::join_of_cycles(2, 5)).find("m >= 3") != std::string::npos);
  CHECK(message(FamilySpec::empty(-1)).find("n >= 0") != std::string::npos);
  CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), ParameterError);
  CHECK_THROWS_AS(fan_graph(0), ParameterError);
  CHECK_THROWS_AS(complete_graph(0), ParameterError);
  CHECK_THROWS_AS(matching_copies(0), ParameterError);
}

TEST_CASE("family tokens round-trip") {
  for (auto kind : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Complete, FamilyKind::Empty,
                    FamilyKind::MatchingCopies, FamilyKind::Wheel, FamilyKind::Fan, FamilyKind::Friendship,
                    FamilyKind::JoinOfCycles})
    CHECK(parse_family_kind(to_string(kind)) == kind);
  CHECK_THROWS_AS(parse_family_kind("petersen"), ParameterError);
  CHECK(describe(FamilySpec::wheel(12)) == "wheel(n=12)");
  CHECK(describe(FamilySpec::join_of_cycles(14, 17)) == "join-cycles(m=14,n=17)");
}

TEST_CASE("family degree sequences") {
  for (int n = 3; n <= 40; ++n) {
    Graph w = wheel_graph(n);
    auto d = sorted_degrees(w);
    CHECK(d.back() == n);
    CHECK(std::count(d.begin(), d.end(), 3) == (n == 3 ? 4 : n));
    check_simple(w);
    CHECK(sorted_degrees(cycle_graph(n)) == std::vector<int>(static_cast<std::size_t>(n), 2));
  }
  for (int n = 2; n <= 40; ++n) {
    auto d = sorted_degrees(path_graph(n));
    CHECK(std::count(d.begin(), d.end(), 1) == 2);
    CHECK(std::count(d.begin(), d.end(), 2) == n - 2);
    Graph f = fan_graph(n);
    check_simple(f);
    CHECK(f.degree(0) == n);
    CHECK(f.edge_count() == static_cast<std::size_t>(2 * n - 1));
  }
  for (int m = 1; m <= 20; ++m) {
    Graph fr = friendship_graph(m);
    check_simple(fr);
    CHECK(fr.degree(0) == 2 * m);
    for (Vertex v = 1; v < fr.order(); ++v) CHECK(fr.degree(v) == 2);
  }
  for (int n = 1; n <= 12; ++n) {
    CHECK(sorted_degrees(complete_graph(n)) == std::vector<int>(static_cast<std::size_t>(n), n - 1));
    CHECK(sorted_degrees(empty_graph(n)) == std::vector<int>(static_cast<std::size_t>(n), 0));
  }
}

TEST_CASE("join edge count and degrees on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = oracle::random_graph(rng, static_cast<int>(rng() % 9), 0.4);
    auto b = oracle::random_graph(rng, static_cast<int>(rng() % 9), 0.4);
    Graph g = a.graph();
    Graph h = b.graph();
    Graph j = join(g, h);
    check_simple(j);
    CHECK(j.order() == g.order() + h.order());
    CHECK(j.edge_count() ==
          g.edge_count() + h.edge_count() + static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(h.order()));
    for (Vertex v = 0; v < g.order(); ++v) CHECK(j.degree(v) == g.degree(v) + h.order());
    for (Vertex v = 0; v < h.order(); ++v) CHECK(j.degree(g.order() + v) == h.degree(v) + g.order());

    Graph u = disjoint_union(g, h);
    check_simple(u);
    CHECK(u.edge_count() == g.edge_count() + h.edge_count());
    for (Vertex x = 0; x < g.order(); ++x)
      for (Vertex y = 0; y < h.order(); ++y) {
        CHECK(j.has_edge(x, g.order() + y));
        CHECK_FALSE(u.has_edge(x, g.order() + y));
      }
  }
}
