#pragma once

#include "srdf/graph.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace srdf {

/// Raised when a labeling and a graph disagree on the number of vertices.
class LengthMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Legal vertex values are -1, 1 and 2.
constexpr bool is_label_value(int value) { return value == -1 || value == 1 || value == 2; }

/// Assignment of each vertex to a value in {-1, 1, 2}.
class Labeling {
public:
  Labeling() = default;
  /// Throws ParameterError if any entry is not a legal value.
  explicit Labeling(std::vector<int> values);
  Labeling(std::initializer_list<int> values) : Labeling(std::vector<int>(values)) {}

  /// n copies of the same value.
  static Labeling uniform(int n, int value);

  std::size_t size() const { return values_.size(); }
  int operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
  std::span<const int> values() const { return values_; }

  /// Vertex sets V_{-1}, V_1, V_2.
  std::vector<Vertex> vertices_with(int value) const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

private:
  std::vector<int> values_;
};

/// w(f) = sum of all values = 2|V_2| + |V_1| - |V_{-1}|.
int weight(const Labeling& f);

/// f(S) over an arbitrary vertex subset.
int sum_over(const Labeling& f, std::span<const Vertex> vertices);

/// f(N[v]).
int closed_sum(const Graph& g, const Labeling& f, Vertex v);

struct VerificationReport {
  bool valid = false;
  int weight = 0;
  /// Vertices x with f(N[x]) < 1.
  std::vector<Vertex> condition_a_failures;
  /// Vertices x with f(x) = -1 and no open neighbor labeled 2.
  std::vector<Vertex> condition_b_failures;
  std::vector<int> per_vertex_closed_sums;
};

/// Checks both SRDF conditions at every vertex and reports every violation.
VerificationReport verify(const Graph& g, const Labeling& f);

/// Same predicate as verify().valid without building a report. Raw values are
/// assumed legal.
bool is_srdf(const Graph& g, std::span<const int> values);

/// "2,-1,1" style serialization in vertex-index order.
std::string format_values(const Labeling& f);
/// Inverse of format_values; throws ParameterError on bad tokens.
Labeling parse_values(const std::string& text);

}  // namespace srdf
