#pragma once

#include "srdf/graph.hpp"
#include "srdf/labeling.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>

namespace srdf {

enum class SolveMethod { Exhaustive, BranchAndBound };

std::string to_string(SolveMethod method);

struct SolveOptions {
  /// Graphs with at most this many vertices are solved by plain enumeration.
  int exhaustive_threshold = 12;
  /// Cap on explored search nodes (labelings, for the exhaustive method).
  std::optional<std::uint64_t> node_budget;
  /// When false, branch-and-bound splits the tree across worker threads. The
  /// optimum value is unchanged but the witness may differ between runs.
  bool deterministic = true;
  /// Worker count for non-deterministic mode; 0 picks hardware concurrency.
  unsigned threads = 0;
};

struct SolveResult {
  int gamma = 0;
  Labeling witness;
  std::uint64_t nodes_explored = 0;
  SolveMethod method = SolveMethod::Exhaustive;
  std::chrono::nanoseconds elapsed{0};
};

/// Search stopped at the node budget. Carries the bounds proven so far.
class BudgetExhausted : public std::runtime_error {
public:
  BudgetExhausted(int lower_bound, std::optional<int> upper_bound, std::optional<Labeling> incumbent,
                  std::uint64_t nodes_explored);

  int lower_bound() const { return lower_bound_; }
  std::optional<int> upper_bound() const { return upper_bound_; }
  const std::optional<Labeling>& incumbent() const { return incumbent_; }
  std::uint64_t nodes_explored() const { return nodes_explored_; }

private:
  int lower_bound_;
  std::optional<int> upper_bound_;
  std::optional<Labeling> incumbent_;
  std::uint64_t nodes_explored_;
};

/// Minimum SRDF weight of g, with an optimal witness. Dispatches on
/// opts.exhaustive_threshold. Throws ParameterError on the order-0 graph and
/// BudgetExhausted when opts.node_budget runs out.
SolveResult solve_exact(const Graph& g, const SolveOptions& opts = {});

/// Enumerates all 3^n labelings in lexicographic order; the witness is the
/// first minimum-weight SRDF in that order.
SolveResult solve_exhaustive(const Graph& g, std::optional<std::uint64_t> node_budget = std::nullopt);

/// Depth-first branch-and-bound. Vertices are branched by descending degree
/// (ties by index), values in the order 2, 1, -1.
SolveResult solve_branch_and_bound(const Graph& g, const SolveOptions& opts = {});

/// 1 when g has a universal vertex (its closed sum is the whole weight),
/// otherwise the trivial bound -order.
int lower_bound_universal(const Graph& g);

/// Every feasible labeling satisfies sum_x f(N[x]) >= n, which with
/// f >= -1 gives (D+1) w(f) >= n - sum_y (D - deg y). Returns the rounded-up
/// bound; on regular graphs this is ceil(n / (D+1)).
int lower_bound_degree_sum(const Graph& g);

using LabelingFilter = std::function<bool(std::span<const int>)>;
using LabelingVisitor = std::function<void(std::span<const int>)>;

/// Streams every labeling of g in lexicographic order over (-1, 1, 2),
/// vertex 0 most significant, calling visitor on those passing filter.
/// Returns the number visited.
std::uint64_t enumerate_labelings(const Graph& g, const LabelingFilter& filter, const LabelingVisitor& visitor);

/// Same order and output as enumerate_labelings with a weight == target
/// filter, but prunes prefixes that cannot reach the target.
std::uint64_t enumerate_labelings_with_weight(const Graph& g, int target, const LabelingVisitor& visitor);

}  // namespace srdf
