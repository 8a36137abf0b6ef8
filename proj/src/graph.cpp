#include "srdf/graph.hpp"

#include <algorithm>
#include <map>

namespace srdf {

Graph::Graph(std::vector<std::vector<Vertex>> adjacency) : adjacency_(std::move(adjacency)) {
  std::size_t twice = 0;
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    twice += row.size();
  }
  edge_count_ = twice / 2;
}

Graph Graph::from_edges(int order, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (order < 0)
    throw ParameterError("graph order must be non-negative, got " + std::to_string(order));
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(order));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") has an endpoint outside [0," + std::to_string(order) + ")");
    if (u == v)
      throw ParameterError("self-loop at vertex " + std::to_string(u));
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  return Graph(std::move(adjacency));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw ParameterError("vertex " + std::to_string(v) + " outside [0," + std::to_string(order()) + ")");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  check_vertex(v);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[static_cast<std::size_t>(u)])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  auto open = g.neighbors(v);
  std::vector<Vertex> out(open.begin(), open.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

int max_degree(const Graph& g) {
  if (g.order() == 0)
    throw ParameterError("maximum degree is undefined on the empty-order graph");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::max(best, g.degree(v));
  return best;
}

bool has_universal_vertex(const Graph& g) {
  return g.order() > 0 && max_degree(g) == g.order() - 1;
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
  const int shift = g.order();
  std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
  for (auto [u, v] : h.edges())
    edges.emplace_back(u + shift, v + shift);
  if (cross)
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < h.order(); ++v)
        edges.emplace_back(u, v + shift);
  return Graph::from_edges(g.order() + h.order(), edges);
}

void require(bool ok, const std::string& what) {
  if (!ok)
    throw ParameterError(what);
}

}  // namespace

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1, got n=" + std::to_string(n));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3, got n=" + std::to_string(n));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph requires n >= 1, got n=" + std::to_string(n));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph requires n >= 0, got n=" + std::to_string(n));
  return Graph::from_edges(n, {});
}

Graph matching_copies(int m) {
  require(m >= 1, "matching copies requires m >= 1, got m=" + std::to_string(m));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < m; ++i)
    edges.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edges(2 * m, edges);
}

Graph wheel_graph(int n) {
  require(n >= 3, "wheel requires n >= 3, got n=" + std::to_string(n));
  return join(complete_graph(1), cycle_graph(n));
}

Graph fan_graph(int n) {
  require(n >= 1, "fan requires n >= 1, got n=" + std::to_string(n));
  return join(complete_graph(1), path_graph(n));
}

Graph friendship_graph(int m) {
  require(m >= 1, "friendship requires m >= 1, got m=" + std::to_string(m));
  return join(complete_graph(1), matching_copies(m));
}

Graph join_of_cycles(int m, int n) {
  require(m >= 3, "join of cycles requires m >= 3, got m=" + std::to_string(m));
  require(n >= 3, "join of cycles requires n >= 3, got n=" + std::to_string(n));
  return join(cycle_graph(m), cycle_graph(n));
}

void validate(const FamilySpec& spec) {
  switch (spec.kind) {
  case FamilyKind::Path:
    require(spec.n >= 1, "path requires n >= 1, got n=" + std::to_string(spec.n));
    break;
  case FamilyKind::Cycle:
    require(spec.n >= 3, "cycle requires n >= 3, got n=" + std::to_string(spec.n));
    break;
  case FamilyKind::Complete:
    require(spec.n >= 1, "complete graph requires n >= 1, got n=" + std::to_string(spec.n));
    break;
  case FamilyKind::Empty:
    require(spec.n >= 0, "empty graph requires n >= 0, got n=" + std::to_string(spec.n));
    break;
  case FamilyKind::MatchingCopies:
    require(spec.m >= 1, "matching copies requires m >= 1, got m=" + std::to_string(spec.m));
    break;
  case FamilyKind::Wheel:
    require(spec.n >= 3, "wheel requires n >= 3, got n=" + std::to_string(spec.n));
    break;
  case FamilyKind::Fan:
    require(spec.n >= 1, "fan requires n >= 1, got n=" + std::to_string(spec.n));
    break;
  case FamilyKind::Friendship:
    require(spec.m >= 1, "friendship requires m >= 1, got m=" + std::to_string(spec.m));
    break;
  case FamilyKind::JoinOfCycles:
    require(spec.m >= 3, "join of cycles requires m >= 3, got m=" + std::to_string(spec.m));
    require(spec.n >= 3, "join of cycles requires n >= 3, got n=" + std::to_string(spec.n));
    break;
  }
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
  case FamilyKind::Path: return path_graph(spec.n);
  case FamilyKind::Cycle: return cycle_graph(spec.n);
  case FamilyKind::Complete: return complete_graph(spec.n);
  case FamilyKind::Empty: return empty_graph(spec.n);
  case FamilyKind::MatchingCopies: return matching_copies(spec.m);
  case FamilyKind::Wheel: return wheel_graph(spec.n);
  case FamilyKind::Fan: return fan_graph(spec.n);
  case FamilyKind::Friendship: return friendship_graph(spec.m);
  case FamilyKind::JoinOfCycles: return join_of_cycles(spec.m, spec.n);
  }
  throw ParameterError("unknown family kind");
}

namespace {

const std::map<FamilyKind, std::string>& kind_names() {
  static const std::map<FamilyKind, std::string> names = {
      {FamilyKind::Path, "path"},
      {FamilyKind::Cycle, "cycle"},
      {FamilyKind::Complete, "complete"},
      {FamilyKind::Empty, "empty"},
      {FamilyKind::MatchingCopies, "matching"},
      {FamilyKind::Wheel, "wheel"},
      {FamilyKind::Fan, "fan"},
      {FamilyKind::Friendship, "friendship"},
      {FamilyKind::JoinOfCycles, "join-cycles"},
  };
  return names;
}

}  // namespace

std::string to_string(FamilyKind kind) { return kind_names().at(kind); }

FamilyKind parse_family_kind(const std::string& token) {
  for (const auto& [kind, name] : kind_names())
    if (name == token)
      return kind;
  throw ParameterError("unknown family '" + token + "'");
}

std::string describe(const FamilySpec& spec) {
  std::string out = to_string(spec.kind) + "(";
  switch (spec.kind) {
  case FamilyKind::MatchingCopies:
  case FamilyKind::Friendship:
    out += "m=" + std::to_string(spec.m);
    break;
  case FamilyKind::JoinOfCycles:
    out += "m=" + std::to_string(spec.m) + ",n=" + std::to_string(spec.n);
    break;
  default:
    out += "n=" + std::to_string(spec.n);
    break;
  }
  return out + ")";
}

}  // namespace srdf
