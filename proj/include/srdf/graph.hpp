#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace srdf {

using Vertex = int;

/// Raised when a family parameter or vertex index is out of range.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph. Immutable once built; neighbor lists are sorted.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects loops and out-of-range
  /// endpoints; duplicate edges collapse to one.
  static Graph from_edges(int order, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  explicit Graph(std::vector<std::vector<Vertex>> adjacency);
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// N[v] = N(v) + {v}, sorted ascending.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

/// Throws ParameterError on the order-0 graph.
int max_degree(const Graph& g);
bool has_universal_vertex(const Graph& g);

/// G v H: g's vertices keep indices [0, g.order()), h's are shifted up by g.order().
Graph join(const Graph& g, const Graph& h);

/// Vertex-disjoint union, same index convention as join.
Graph disjoint_union(const Graph& g, const Graph& h);

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  Empty,
  MatchingCopies,
  Wheel,
  Fan,
  Friendship,
  JoinOfCycles,
};

/// A named graph family with its integer parameters. Single-parameter kinds
/// use `n`; MatchingCopies and Friendship use `m`; JoinOfCycles uses both.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  int m = 0;
  int n = 0;

  static FamilySpec path(int n) { return {FamilyKind::Path, 0, n}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, 0, n}; }
  static FamilySpec complete(int n) { return {FamilyKind::Complete, 0, n}; }
  static FamilySpec empty(int n) { return {FamilyKind::Empty, 0, n}; }
  static FamilySpec matching(int m) { return {FamilyKind::MatchingCopies, m, 0}; }
  static FamilySpec wheel(int n) { return {FamilyKind::Wheel, 0, n}; }
  static FamilySpec fan(int n) { return {FamilyKind::Fan, 0, n}; }
  static FamilySpec friendship(int m) { return {FamilyKind::Friendship, m, 0}; }
  static FamilySpec join_of_cycles(int m, int n) { return {FamilyKind::JoinOfCycles, m, n}; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws ParameterError naming the violated bound.
void validate(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph matching_copies(int m);
Graph wheel_graph(int n);
Graph fan_graph(int n);
Graph friendship_graph(int m);
Graph join_of_cycles(int m, int n);

/// Lower-case CLI token for a family kind, e.g. "join-cycles".
std::string to_string(FamilyKind kind);
FamilyKind parse_family_kind(const std::string& token);

/// Human-readable descriptor such as "wheel(n=12)" or "join-cycles(m=14,n=17)".
std::string describe(const FamilySpec& spec);

}  // namespace srdf
