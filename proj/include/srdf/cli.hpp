#pragma once

#include <ostream>

namespace srdf {

/// Exit codes shared by every subcommand.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int refuted = 1;
inline constexpr int invalid_labeling = 2;
inline constexpr int budget_exhausted = 3;
inline constexpr int usage = 64;
}  // namespace exit_code

/// Environment variable read by `solve` and `bench` as a node budget.
inline constexpr const char* kNodeBudgetEnv = "SRDF_NODE_BUDGET";

/// Entry point for the `srdf` command line: solve, verify, construct, check, bench.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srdf
