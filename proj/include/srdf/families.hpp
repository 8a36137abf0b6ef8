#pragma once

#include "srdf/graph.hpp"
#include "srdf/labeling.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srdf {

enum class ClaimKind { ExactValue, UpperBound };

std::string to_string(ClaimKind kind);

/// An explicit labeling for a family graph, already checked by verify():
/// the labeling is an SRDF and its weight equals claimed_weight.
struct Construction {
  Graph graph;
  Labeling labeling;
  int claimed_weight = 0;
  ClaimKind claim_kind = ClaimKind::ExactValue;
  /// Short tag naming the pattern that produced the labeling.
  std::string source;
};

/// A constructor produced a labeling that failed verification or missed its
/// claimed weight. Always indicates a bug in the pattern.
class ConstructionError : public std::logic_error {
public:
  ConstructionError(const std::string& what, Graph graph, Labeling labeling, int claimed_weight)
      : std::logic_error(what), graph_(std::move(graph)), labeling_(std::move(labeling)), claimed_(claimed_weight) {}

  const Graph& graph() const { return graph_; }
  const Labeling& labeling() const { return labeling_; }
  int claimed_weight() const { return claimed_; }

private:
  Graph graph_;
  Labeling labeling_;
  int claimed_;
};

// Per-cycle patterns, indexed by 0-based vertex, built from 1-based positions.

/// 2 at positions = 1 (mod 3), -1 elsewhere.
std::vector<int> cycle_pattern_mod3(int length);
/// Odd length: 2 at position 1, -1 at even positions, 1 at odd positions >= 3. Sums to 2.
std::vector<int> cycle_pattern_odd(int length);
/// Even length: 2 at positions 1 and 3, -1 at even positions, 1 at odd positions >= 5. Sums to 2.
std::vector<int> cycle_pattern_even(int length);
/// Length != 2 (mod 3), sums to 2 with every cycle closed sum >= 0.
std::vector<int> cycle_pattern_sum2(int length);
/// Sums to 1 with every cycle closed sum >= -1. Covers all residues mod 3.
std::vector<int> cycle_pattern_sum1(int length);
/// Hub value followed by the rim values for the weight-one wheel labelings (n != 4).
std::vector<int> wheel_pattern(int n);

/// C_3 v C_n with n = 0 (mod 3). Weight 1, exact.
Construction construct_c3_join_cycle(int n);
/// C_m v C_n, any m, n >= 3. Weight 4, upper bound.
Construction construct_join_cycles_weight4(int m, int n);
/// C_m v C_n, m, n >= 13, both = 2 (mod 3). Weight 2, exact.
Construction construct_join_cycles_22(int m, int n);
/// C_m v C_n, m, n >= 13, m = 2 and n != 2 (mod 3). Weight 3, exact.
Construction construct_join_cycles_23(int m, int n);
/// C_m v C_n, m, n >= 13, neither = 2 (mod 3). Weight 3, exact.
Construction construct_join_cycles_33(int m, int n);
Construction construct_wheel(int n);
/// Fans reuse the wheel patterns, rotated so the missing rim edge does not
/// break a closed neighborhood; small cases fall back to the exact solver.
Construction construct_fan(int n);
Construction construct_friendship(int m);

/// Best available construction for a family. Join of cycles picks the exact
/// construction when one applies (mirroring the asymmetric cases), otherwise
/// the weight-4 bound. Throws ParameterError for families without one.
Construction construct(const FamilySpec& spec);

/// Closed-form signed Roman domination number where one is known, nullopt otherwise.
std::optional<int> gamma_formula(const FamilySpec& spec);

}  // namespace srdf
