#include "srdf/cli.hpp"

#include "srdf/families.hpp"
#include "srdf/graph6.hpp"
#include "srdf/records.hpp"
#include "srdf/solver.hpp"
#include "srdf/theorem_suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <string>

namespace srdf {

namespace {

struct GraphArgs {
  std::string graph6;
  std::string family;
  int n = 0;
  int m = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "graph family: path, cycle, complete, empty, matching, wheel, fan, "
                                        "friendship, join-cycles");
    cmd->add_option("--n", n, "family size parameter n");
    cmd->add_option("--m", m, "family parameter m (friendship pairs, matching copies, first cycle)");
  }

  std::optional<FamilySpec> spec() const {
    if (family.empty())
      return std::nullopt;
    FamilySpec s{parse_family_kind(family), m, n};
    validate(s);
    return s;
  }

  Graph graph() const {
    if (auto s = spec())
      return generate(*s);
    if (graph6.empty())
      throw ParameterError("give a graph6 string or --family");
    return parse_graph6(graph6);
  }
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::optional<std::uint64_t> budget_from(std::optional<std::uint64_t> flag) {
  if (flag)
    return flag;
  if (const char* env = std::getenv(kNodeBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string(kNodeBudgetEnv) + " is not a number: '" + env + "'");
    }
  }
  return std::nullopt;
}

int print_budget(const BudgetExhausted& e, std::ostream& out) {
  nlohmann::json j = {
      {"status", "budget-exhausted"},
      {"lower_bound", e.lower_bound()},
      {"upper_bound", e.upper_bound() ? nlohmann::json(*e.upper_bound()) : nlohmann::json(nullptr)},
      {"nodes", e.nodes_explored()},
  };
  if (e.incumbent())
    j["incumbent"] = format_values(*e.incumbent());
  out << j.dump() << '\n';
  return exit_code::budget_exhausted;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw UsageError("range must look like A..B, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("range must look like A..B, got '" + text + "'");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed Roman domination: exact solving, verification and constructions"};
  app.require_subcommand(1);

  GraphArgs solve_args;
  std::optional<std::uint64_t> solve_budget;
  int solve_threshold = SolveOptions{}.exhaustive_threshold;
  bool solve_parallel = false;
  auto* solve = app.add_subcommand("solve", "exact signed Roman domination number with a witness");
  solve->add_option("graph6", solve_args.graph6, "graph in graph6 format");
  solve_args.attach(solve);
  solve->add_option("--budget", solve_budget, "node budget (overrides " + std::string(kNodeBudgetEnv) + ")");
  solve->add_option("--exhaustive-threshold", solve_threshold, "largest order solved by plain enumeration")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--parallel", solve_parallel, "split branch-and-bound across threads");

  GraphArgs verify_args;
  std::string labels;
  auto* verify_cmd = app.add_subcommand("verify", "check a labeling against both SRDF conditions");
  verify_cmd->add_option("graph6", verify_args.graph6, "graph in graph6 format");
  verify_args.attach(verify_cmd);
  verify_cmd->add_option("--labels", labels, "comma-separated values, e.g. 2,-1,1")->required();

  GraphArgs construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "explicit labeling for a family graph");
  construct_args.attach(construct_cmd);
  construct_cmd->get_option("--family")->required();

  std::string suite_name = "all";
  SuiteOptions suite_opts;
  auto* check = app.add_subcommand("check", "run the claim checks and print one record per check");
  check->add_option("--suite", suite_name, "all, formulas, constructions, lemma36 or structural");
  check->add_option("--max-order", suite_opts.max_order, "largest order handed to the exact solver");
  check->add_option("--seed", suite_opts.seed, "seed for the random structural corpus");

  std::string bench_family = "join-cycles";
  std::string bench_range;
  auto* bench = app.add_subcommand("bench", "solver timing table over a family range");
  bench->add_option("--family", bench_family, "family; join-cycles runs all pairs A<=m<=n<=B");
  bench->add_option("--range", bench_range, "parameter range A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  try {
    if (solve->parsed()) {
      const auto spec = solve_args.spec();
      const Graph g = solve_args.graph();
      SolveOptions opts;
      opts.exhaustive_threshold = solve_threshold;
      opts.node_budget = budget_from(solve_budget);
      opts.deterministic = !solve_parallel;
      try {
        const auto r = solve_exact(g, opts);
        auto record = make_record(g, r.witness, "solver:" + to_string(r.method));
        if (spec)
          record.family = describe(*spec);
        record.gamma = r.gamma;
        auto j = to_json(record);
        j["nodes"] = r.nodes_explored;
        out << j.dump() << '\n';
        return exit_code::ok;
      } catch (const BudgetExhausted& e) {
        return print_budget(e, out);
      }
    }

    if (verify_cmd->parsed()) {
      const Graph g = verify_args.graph();
      const auto report = verify(g, parse_values(labels));
      auto j = to_json(report);
      j["graph"] = write_graph6(g);
      out << j.dump() << '\n';
      return report.valid ? exit_code::ok : exit_code::invalid_labeling;
    }

    if (construct_cmd->parsed()) {
      const auto spec = *construct_args.spec();
      out << to_json(make_record(construct(spec), spec)).dump() << '\n';
      return exit_code::ok;
    }

    if (check->parsed()) {
      const auto checks = run_suite(parse_suite(suite_name), suite_opts);
      for (const auto& c : checks)
        out << to_json(c).dump() << '\n';
      return any_refuted(checks) ? exit_code::refuted : exit_code::ok;
    }

    if (bench->parsed()) {
      const auto [lo, hi] = parse_range(bench_range);
      const auto kind = parse_family_kind(bench_family);
      SolveOptions opts;
      opts.node_budget = budget_from(std::nullopt);
      std::vector<FamilySpec> specs;
      for (int a = lo; a <= hi; ++a) {
        if (kind == FamilyKind::JoinOfCycles) {
          for (int b = a; b <= hi; ++b)
            specs.push_back(FamilySpec::join_of_cycles(a, b));
        } else if (kind == FamilyKind::Friendship || kind == FamilyKind::MatchingCopies) {
          specs.push_back({kind, a, 0});
        } else {
          specs.push_back({kind, 0, a});
        }
      }
      out << std::left << std::setw(26) << "instance" << std::right << std::setw(7) << "order" << std::setw(7)
          << "gamma" << std::setw(14) << "nodes" << std::setw(18) << "method" << std::setw(12) << "ms" << '\n';
      int status = exit_code::ok;
      for (const auto& s : specs) {
        const Graph g = generate(s);
        out << std::left << std::setw(26) << describe(s) << std::right << std::setw(7) << g.order();
        try {
          const auto r = solve_exact(g, opts);
          const double ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
          out << std::setw(7) << r.gamma << std::setw(14) << r.nodes_explored << std::setw(18)
              << to_string(r.method) << std::setw(12) << std::fixed << std::setprecision(2) << ms << '\n';
        } catch (const BudgetExhausted& e) {
          out << std::setw(7) << ("[" + std::to_string(e.lower_bound()) + "," +
                                  (e.upper_bound() ? std::to_string(*e.upper_bound()) : std::string("?")) + "]")
              << std::setw(14) << e.nodes_explored() << std::setw(18) << "budget" << std::setw(12) << "-" << '\n';
          status = exit_code::budget_exhausted;
        }
      }
      return status;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const LengthMismatch& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace srdf
