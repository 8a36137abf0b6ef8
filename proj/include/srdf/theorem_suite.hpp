#pragma once

#include "srdf/graph.hpp"
#include "srdf/labeling.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace srdf {

enum class ClaimStatus { Confirmed, Refuted, SkippedScale };

std::string to_string(ClaimStatus status);

/// What a counterexample labeling demonstrates; recheck() re-derives it from
/// the graph and labeling alone.
enum class Shows {
  /// A valid SRDF lighter than the claimed value.
  SrdfBelow,
  /// An optimal SRDF heavier than the claimed value.
  OptimumAbove,
  /// A labeling emitted as an SRDF that fails verification.
  NotSrdf,
  /// A valid SRDF whose weight differs from the claimed value.
  WeightMismatch,
  /// A cycle labeling of weight `reference` with every closed sum >= 0.
  NoNegativeClosedSum,
};

struct Counterexample {
  Graph graph;
  Labeling labeling;
  Shows shows = Shows::SrdfBelow;
  int reference = 0;
};

/// Re-verifies a counterexample through the verifier only.
bool recheck(const Counterexample& ce);

struct ClaimCheck {
  std::string claim_id;
  std::string instance;
  /// Numeric instance parameters; secondary sort key after claim_id.
  std::vector<int> params;
  ClaimStatus status = ClaimStatus::Confirmed;
  nlohmann::json evidence = nlohmann::json::object();
  std::optional<Counterexample> counterexample;
};

struct SuiteOptions {
  /// Instances larger than this are reported as skipped instead of solved.
  int max_order = 16;
  std::uint64_t seed = 20170417;
  /// Node budget for the informational C13 v C13 branch-and-bound run.
  std::uint64_t probe_node_budget = 2'000'000;
  /// Largest cycle length for the exhaustive weight-one enumeration.
  int max_enumeration_length = 16;
};

/// One solver-vs-formula record per parameter value in [lo, hi]. For
/// JoinOfCycles the range runs over n with m fixed by `fixed_m`.
std::vector<ClaimCheck> check_formula(FamilyKind kind, int lo, int hi, const SuiteOptions& opts = {},
                                      int fixed_m = 3);

/// Formula checks for every family value the suite reproduces.
std::vector<ClaimCheck> check_all_formulas(const SuiteOptions& opts = {});

/// Construction validity over the full parameter ranges, plus skipped records
/// for exact lower bounds beyond solver reach.
std::vector<ClaimCheck> check_constructions(const SuiteOptions& opts = {});

/// Enumerates every weight-one labeling of C_n and looks for one with all
/// closed sums >= 0. For n >= 13, n != 2 (mod 3) none may exist; for
/// n = 2 (mod 3) the mod-3 pattern must turn up as one.
ClaimCheck check_negative_neighbour(int n, const SuiteOptions& opts = {});

/// Bounds on joins checked against the solver over a seeded random corpus.
std::vector<ClaimCheck> check_structural(const SuiteOptions& opts = {});

enum class Suite { All, Formulas, Constructions, NegativeNeighbour, Structural };

Suite parse_suite(const std::string& token);

/// Runs the selected checks and returns records sorted by claim_id, then params.
std::vector<ClaimCheck> run_suite(Suite suite, const SuiteOptions& opts = {});

bool any_refuted(const std::vector<ClaimCheck>& checks);

nlohmann::json to_json(const ClaimCheck& check);

/// Seeded random simple graph; each pair is an edge with probability
/// density_percent / 100. Uses only raw 64-bit draws so the sequence is
/// identical across standard libraries.
Graph random_graph(std::uint64_t& state, int order, int density_percent);

}  // namespace srdf
