#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "srdf/cli.hpp"

using namespace srdf;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out.substr(0, out.find('\n'))); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "srdf");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Unsets the budget variable for the lifetime of a test, restoring nothing.
struct NoBudgetEnv {
  NoBudgetEnv() { unsetenv(kNodeBudgetEnv); }
  ~NoBudgetEnv() { unsetenv(kNodeBudgetEnv); }
};

}  // namespace

TEST_CASE("construct prints a valid record") {
  auto r = run({"construct", "--family", "wheel", "--n", "12"});
  CHECK(r.code == exit_code::ok);
  auto j = r.json();
  CHECK(j["weight"] == 1);
  CHECK(j["valid"] == true);
  CHECK(j["gamma"] == 1);
  CHECK(j["family"] == "wheel(n=12)");
}

TEST_CASE("solve reports gamma with a re-verifiable witness") {
  NoBudgetEnv guard;
  auto r = run({"solve", "--family", "friendship", "--m", "2"});
  CHECK(r.code == exit_code::ok);
  auto j = r.json();
  CHECK(j["gamma"] == 2);
  CHECK(j["valid"] == true);
  auto v = run({"verify", j["graph"].get<std::string>(), "--labels", j["values"].get<std::string>()});
  CHECK(v.code == exit_code::ok);
  CHECK(v.json()["weight"] == 2);

  auto g6 = run({"solve", "Bw"});
  CHECK(g6.code == exit_code::ok);
  CHECK(g6.json()["gamma"] == 2);
  auto parallel = run({"solve", "--family", "cycle", "--n", "13", "--parallel"});
  CHECK(parallel.json()["gamma"] == 9);
}

TEST_CASE("construct records re-verify through the verify subcommand") {
  for (std::vector<std::string> args : {std::vector<std::string>{"--family", "fan", "--n", "12"},
                                        {"--family", "join-cycles", "--m", "14", "--n", "17"},
                                        {"--family", "join-cycles", "--m", "5", "--n", "7"},
                                        {"--family", "friendship", "--m", "4"}}) {
    args.insert(args.begin(), "construct");
    auto c = run(args);
    REQUIRE(c.code == exit_code::ok);
    auto j = c.json();
    auto v = run({"verify", j["graph"].get<std::string>(), "--labels", j["values"].get<std::string>()});
    CHECK(v.code == exit_code::ok);
    CHECK(v.json()["weight"] == j["weight"]);
  }
}

TEST_CASE("verify reports invalid labelings with exit code 2") {
  auto r = run({"verify", "--family", "cycle", "--n", "4", "--labels", "-1,-1,-1,-1"});
  CHECK(r.code == exit_code::invalid_labeling);
  auto j = r.json();
  CHECK(j["condition_a_failures"] == nlohmann::json::array({0, 1, 2, 3}));
  CHECK(j["valid"] == false);
  CHECK(run({"verify", "Bw", "--labels=-1,2,1"}).code == exit_code::ok);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"frobnicate"}).code == exit_code::usage);
  CHECK(run({"construct", "--family", "petersen", "--n", "3"}).code == exit_code::usage);
  CHECK(run({"construct", "--family", "cycle", "--n", "5"}).code == exit_code::usage);
  CHECK(run({"construct", "--family", "wheel", "--n", "2"}).code == exit_code::usage);
  CHECK(run({"verify", "Bw"}).code == exit_code::usage);
  CHECK(run({"verify", "Bw", "--labels", "1,1"}).code == exit_code::usage);
  CHECK(run({"verify", "Bw", "--labels", "1,0,1"}).code == exit_code::usage);
  auto bad = run({"verify", "B!", "--labels", "1,1,1"});
  CHECK(bad.code == exit_code::usage);
  CHECK(bad.err.find("byte 1") != std::string::npos);
  CHECK(run({"solve"}).code == exit_code::usage);
  CHECK(run({"check", "--suite", "everything"}).code == exit_code::usage);
  CHECK(run({"bench", "--range", "3-5"}).code == exit_code::usage);
}

TEST_CASE("node budget from the flag and the environment") {
  NoBudgetEnv guard;
  auto flag = run({"solve", "--family", "join-cycles", "--m", "13", "--n", "13", "--budget", "5000"});
  CHECK(flag.code == exit_code::budget_exhausted);
  auto j = flag.json();
  CHECK(j["status"] == "budget-exhausted");
  CHECK(j["lower_bound"].get<int>() >= 2);

  setenv(kNodeBudgetEnv, "100", 1);
  CHECK(run({"solve", "--family", "cycle", "--n", "13"}).code == exit_code::budget_exhausted);
  CHECK(run({"solve", "--family", "cycle", "--n", "13", "--budget", "10000000"}).code == exit_code::ok);
  setenv(kNodeBudgetEnv, "lots", 1);
  CHECK(run({"solve", "--family", "cycle", "--n", "5"}).code == exit_code::usage);
}

TEST_CASE("check output is deterministic and exits 0 without refutations") {
  auto a = run({"check", "--suite", "formulas", "--seed", "5"});
  auto b = run({"check", "--suite", "formulas", "--seed", "5"});
  CHECK(a.code == exit_code::ok);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["status"] == "confirmed");
    ++count;
  }
  CHECK(count > 60);
}

TEST_CASE("bench prints one row per instance") {
  NoBudgetEnv guard;
  auto r = run({"bench", "--family", "join-cycles", "--range", "3..5"});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out.find("join-cycles(m=3,n=3)") != std::string::npos);
  CHECK(r.out.find("join-cycles(m=4,n=5)") != std::string::npos);
  CHECK(r.out.find("join-cycles(m=5,n=3)") == std::string::npos);
  auto wheels = run({"bench", "--family", "wheel", "--range", "3..6"});
  CHECK(wheels.out.find("wheel(n=6)") != std::string::npos);
}
