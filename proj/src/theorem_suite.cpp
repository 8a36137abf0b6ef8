#include "srdf/theorem_suite.hpp"

#include "srdf/families.hpp"
#include "srdf/graph6.hpp"
#include "srdf/solver.hpp"

#include <algorithm>
#include <functional>
#include <climits>
#include <map>
#include <numeric>
#include <tuple>

namespace srdf {

using nlohmann::json;

std::string to_string(ClaimStatus status) {
  switch (status) {
  case ClaimStatus::Confirmed: return "confirmed";
  case ClaimStatus::Refuted: return "refuted";
  case ClaimStatus::SkippedScale: return "skipped-scale";
  }
  return "unknown";
}

namespace {

std::string to_string(Shows shows) {
  switch (shows) {
  case Shows::SrdfBelow: return "srdf-below-claim";
  case Shows::OptimumAbove: return "optimum-above-claim";
  case Shows::NotSrdf: return "not-an-srdf";
  case Shows::WeightMismatch: return "weight-mismatch";
  case Shows::NoNegativeClosedSum: return "no-negative-closed-sum";
  }
  return "unknown";
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int uniform_int(std::uint64_t& state, int lo, int hi) {
  return lo + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(hi - lo + 1));
}

Graph with_universal(const Graph& g, Vertex hub) {
  auto edges = g.edges();
  for (Vertex v = 0; v < g.order(); ++v)
    if (v != hub && !g.has_edge(hub, v))
      edges.emplace_back(hub, v);
  return Graph::from_edges(g.order(), edges);
}

Counterexample make_ce(const Graph& g, const Labeling& f, Shows shows, int reference) {
  return Counterexample{g, f, shows, reference};
}

// Shared bookkeeping for checks that aggregate many instances into one record.
struct Tally {
  int instances = 0;
  int failures = 0;
  std::optional<Counterexample> first;
  std::string first_instance;

  void fail(const std::string& instance, Counterexample ce) {
    if (failures++ == 0) {
      first = std::move(ce);
      first_instance = instance;
    }
  }

  ClaimCheck finish(std::string claim, std::string instance, std::vector<int> params, json evidence) const {
    ClaimCheck c{std::move(claim), std::move(instance), std::move(params), ClaimStatus::Confirmed,
                 std::move(evidence), std::nullopt};
    c.evidence["instances"] = instances;
    c.evidence["failures"] = failures;
    if (failures) {
      c.status = ClaimStatus::Refuted;
      c.counterexample = first;
      c.evidence["first_failure"] = first_instance;
    }
    return c;
  }
};

std::vector<int> params_of(const FamilySpec& spec) {
  switch (spec.kind) {
  case FamilyKind::MatchingCopies:
  case FamilyKind::Friendship: return {spec.m};
  case FamilyKind::JoinOfCycles: return {spec.m, spec.n};
  default: return {spec.n};
  }
}

ClaimCheck formula_check(const FamilySpec& spec, const SuiteOptions& opts) {
  ClaimCheck c;
  c.claim_id = to_string(spec.kind) + "-gamma";
  c.instance = describe(spec);
  c.params = params_of(spec);
  const auto formula = gamma_formula(spec);
  if (!formula)
    throw ParameterError("no closed form for " + describe(spec));
  const Graph g = generate(spec);
  c.evidence["formula"] = *formula;
  c.evidence["order"] = g.order();
  if (g.order() > opts.max_order) {
    c.status = ClaimStatus::SkippedScale;
    c.evidence["reason"] = "order exceeds max-order " + std::to_string(opts.max_order);
    return c;
  }
  const auto solved = solve_exact(g);
  c.evidence["gamma"] = solved.gamma;
  c.evidence["method"] = to_string(solved.method);
  c.evidence["nodes"] = solved.nodes_explored;
  c.evidence["witness"] = format_values(solved.witness);
  if (solved.gamma != *formula) {
    c.status = ClaimStatus::Refuted;
    c.counterexample = make_ce(g, solved.witness, solved.gamma < *formula ? Shows::SrdfBelow : Shows::OptimumAbove,
                               *formula);
  }
  return c;
}

// Runs `make` over instances, re-verifying each result against the expected
// weight and claim kind.
void tally_construction(Tally& t, const std::string& instance, const std::function<Construction()>& make,
                        int expected_weight, ClaimKind expected_kind) {
  ++t.instances;
  try {
    const auto c = make();
    const auto report = verify(c.graph, c.labeling);
    if (!report.valid)
      t.fail(instance, make_ce(c.graph, c.labeling, Shows::NotSrdf, c.claimed_weight));
    else if (report.weight != expected_weight || c.claimed_weight != expected_weight || c.claim_kind != expected_kind)
      t.fail(instance, make_ce(c.graph, c.labeling, Shows::WeightMismatch, expected_weight));
  } catch (const ConstructionError& e) {
    const auto report = verify(e.graph(), e.labeling());
    t.fail(instance, make_ce(e.graph(), e.labeling(), report.valid ? Shows::WeightMismatch : Shows::NotSrdf,
                             e.claimed_weight()));
  }
}

ClaimCheck skipped_lower_bound(const std::string& claim, const std::string& instance, int value) {
  ClaimCheck c;
  c.claim_id = claim;
  c.instance = instance;
  c.params = {13, 98};
  c.status = ClaimStatus::SkippedScale;
  c.evidence["claimed_value"] = value;
  c.evidence["reason"] = "exact lower bound needs an optimum over a join of order >= 26";
  return c;
}

}  // namespace

bool recheck(const Counterexample& ce) {
  const auto report = verify(ce.graph, ce.labeling);
  switch (ce.shows) {
  case Shows::SrdfBelow: return report.valid && report.weight < ce.reference;
  case Shows::OptimumAbove: return report.valid && report.weight > ce.reference;
  case Shows::NotSrdf: return !report.valid;
  case Shows::WeightMismatch: return report.valid && report.weight != ce.reference;
  case Shows::NoNegativeClosedSum:
    return report.weight == ce.reference &&
           std::all_of(report.per_vertex_closed_sums.begin(), report.per_vertex_closed_sums.end(),
                       [](int s) { return s >= 0; });
  }
  return false;
}

Graph random_graph(std::uint64_t& state, int order, int density_percent) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (static_cast<int>(splitmix64(state) % 100) < density_percent)
        edges.emplace_back(u, v);
  return Graph::from_edges(order, edges);
}

std::vector<ClaimCheck> check_formula(FamilyKind kind, int lo, int hi, const SuiteOptions& opts, int fixed_m) {
  std::vector<ClaimCheck> out;
  for (int p = lo; p <= hi; ++p) {
    FamilySpec spec{kind, 0, 0};
    if (kind == FamilyKind::JoinOfCycles) {
      spec.m = fixed_m;
      spec.n = p;
    } else if (kind == FamilyKind::MatchingCopies || kind == FamilyKind::Friendship) {
      spec.m = p;
    } else {
      spec.n = p;
    }
    out.push_back(formula_check(spec, opts));
  }
  return out;
}

std::vector<ClaimCheck> check_all_formulas(const SuiteOptions& opts) {
  std::vector<ClaimCheck> out;
  auto add = [&](std::vector<ClaimCheck> more) { out.insert(out.end(), more.begin(), more.end()); };
  add(check_formula(FamilyKind::Cycle, 3, 13, opts));
  add(check_formula(FamilyKind::Path, 1, 13, opts));
  add(check_formula(FamilyKind::Complete, 1, 9, opts));
  add(check_formula(FamilyKind::Empty, 1, 8, opts));
  add(check_formula(FamilyKind::Wheel, 3, 12, opts));
  add(check_formula(FamilyKind::Fan, 1, 12, opts));
  add(check_formula(FamilyKind::Friendship, 1, 5, opts));
  for (int n : {3, 6, 9, 12})
    add(check_formula(FamilyKind::JoinOfCycles, n, n, opts, 3));
  return out;
}

std::vector<ClaimCheck> check_constructions(const SuiteOptions&) {
  std::vector<ClaimCheck> out;
  const auto tag = [](int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; };

  {
    Tally t;
    for (int m = 3; m <= 40; ++m)
      for (int n = 3; n <= 40; ++n)
        tally_construction(t, tag(m, n), [=] { return construct_join_cycles_weight4(m, n); }, 4,
                           ClaimKind::UpperBound);
    out.push_back(t.finish("join-cycles-upper4", "3<=m,n<=40", {3, 40}, {{"claimed_weight", 4}}));
  }
  {
    Tally t;
    for (int n = 3; n <= 99; n += 3)
      tally_construction(t, tag(3, n), [=] { return construct_c3_join_cycle(n); }, 1, ClaimKind::ExactValue);
    out.push_back(t.finish("c3-join-construction", "m=3, n=0 (mod 3), 3<=n<=99", {3, 99}, {{"claimed_weight", 1}}));
  }

  struct Regime {
    std::string claim;
    std::string instance;
    int weight;
    std::function<bool(int, int)> applies;
    std::function<Construction(int, int)> make;
  };
  const std::vector<Regime> regimes = {
      {"join-cycles-22", "13<=m,n<=98, m=n=2 (mod 3)", 2,
       [](int m, int n) { return m % 3 == 2 && n % 3 == 2; }, construct_join_cycles_22},
      {"join-cycles-23", "13<=m,n<=98, m=2, n!=2 (mod 3)", 3,
       [](int m, int n) { return m % 3 == 2 && n % 3 != 2; }, construct_join_cycles_23},
      {"join-cycles-33", "13<=m,n<=98, m,n!=2 (mod 3)", 3,
       [](int m, int n) { return m % 3 != 2 && n % 3 != 2; }, construct_join_cycles_33},
  };
  for (const auto& r : regimes) {
    Tally t;
    for (int m = 13; m <= 98; ++m)
      for (int n = 13; n <= 98; ++n)
        if (r.applies(m, n))
          tally_construction(t, tag(m, n), [&, m, n] { return r.make(m, n); }, r.weight, ClaimKind::ExactValue);
    out.push_back(t.finish(r.claim, r.instance, {13, 98}, {{"claimed_weight", r.weight}}));
    out.push_back(skipped_lower_bound(r.claim + "-lower-bound", r.instance, r.weight));
  }

  {
    Tally t;
    for (int n = 3; n <= 500; ++n)
      tally_construction(t, "n=" + std::to_string(n), [=] { return construct_wheel(n); }, n == 4 ? 2 : 1,
                         ClaimKind::ExactValue);
    out.push_back(t.finish("wheel-construction", "3<=n<=500", {3, 500}, json::object()));
  }
  {
    Tally t;
    for (int n = 1; n <= 500; ++n)
      tally_construction(t, "n=" + std::to_string(n), [=] { return construct_fan(n); },
                         (n == 2 || n == 4) ? 2 : 1, ClaimKind::ExactValue);
    out.push_back(t.finish("fan-construction", "1<=n<=500", {1, 500}, json::object()));
  }
  {
    Tally t;
    for (int m = 1; m <= 200; ++m)
      tally_construction(t, "m=" + std::to_string(m), [=] { return construct_friendship(m); }, 2,
                         ClaimKind::ExactValue);
    out.push_back(t.finish("friendship-construction", "1<=m<=200", {1, 200}, {{"claimed_weight", 2}}));
  }
  return out;
}

ClaimCheck check_negative_neighbour(int n, const SuiteOptions& opts) {
  const bool boundary = n % 3 == 2;
  if (boundary ? n < 5 : n < 13)
    throw ParameterError("weight-one closed-sum check needs n >= 13 with n != 2 (mod 3), or n >= 5 with n = 2 "
                         "(mod 3); got n=" + std::to_string(n));
  ClaimCheck c;
  c.claim_id = boundary ? "weight-one-closed-sum-boundary" : "weight-one-negative-closed-sum";
  c.instance = "cycle(n=" + std::to_string(n) + ")";
  c.params = {n};
  if (n > opts.max_enumeration_length) {
    c.status = ClaimStatus::SkippedScale;
    c.evidence["reason"] = "3^n enumeration beyond length " + std::to_string(opts.max_enumeration_length);
    return c;
  }

  const Graph g = cycle_graph(n);
  const auto pattern = cycle_pattern_mod3(n);
  std::uint64_t nonnegative = 0;
  bool pattern_seen = false;
  std::optional<std::vector<int>> first;
  const auto visited = enumerate_labelings_with_weight(g, 1, [&](std::span<const int> values) {
    for (Vertex v = 0; v < n; ++v) {
      const int s = values[static_cast<std::size_t>(v)] + values[static_cast<std::size_t>((v + n - 1) % n)] +
                    values[static_cast<std::size_t>((v + 1) % n)];
      if (s < 0)
        return;
    }
    ++nonnegative;
    if (!first)
      first.emplace(values.begin(), values.end());
    if (std::equal(values.begin(), values.end(), pattern.begin()))
      pattern_seen = true;
  });

  c.evidence["weight_one_labelings"] = visited;
  c.evidence["all_closed_sums_nonnegative"] = nonnegative;
  if (boundary) {
    c.evidence["pattern"] = format_values(Labeling(pattern));
    c.evidence["pattern_found"] = pattern_seen;
    if (pattern_seen) {
      std::vector<int> sums;
      const Labeling f(pattern);
      for (Vertex v = 0; v < n; ++v)
        sums.push_back(closed_sum(g, f, v));
      c.evidence["pattern_closed_sums"] = sums;
    } else {
      c.status = ClaimStatus::Refuted;
      // The pattern itself is the labeling whose closed sums were expected to be nonnegative.
      c.counterexample = make_ce(g, Labeling(pattern), Shows::NoNegativeClosedSum, 1);
    }
  } else if (first) {
    c.status = ClaimStatus::Refuted;
    c.counterexample = make_ce(g, Labeling(*first), Shows::NoNegativeClosedSum, 1);
  }
  return c;
}

std::vector<ClaimCheck> check_structural(const SuiteOptions& opts) {
  std::vector<ClaimCheck> out;
  std::uint64_t state = opts.seed;

  {
    Tally t;
    int min_gamma = INT_MAX;
    for (int i = 0; i < 100; ++i) {
      const int order = uniform_int(state, 1, 7);
      const int density = uniform_int(state, 0, 90);
      Graph g = random_graph(state, order, density);
      g = with_universal(g, uniform_int(state, 0, order - 1));
      const auto r = solve_exact(g);
      ++t.instances;
      min_gamma = std::min(min_gamma, r.gamma);
      if (r.gamma < 1)
        t.fail(write_graph6(g), make_ce(g, r.witness, Shows::SrdfBelow, 1));
    }
    out.push_back(t.finish("universal-vertex-bound", "100 random graphs, order<=7, universal vertex", {100},
                           {{"seed", opts.seed}, {"min_gamma", min_gamma}}));
  }

  {
    // Graphs with gamma 0 are rare at random, so sample them first.
    std::vector<Graph> corpus;
    int zero_found = 0;
    for (int attempt = 0; attempt < 20000 && zero_found < 5; ++attempt) {
      const Graph g = random_graph(state, uniform_int(state, 4, 8), uniform_int(state, 10, 50));
      if (solve_exact(g).gamma == 0) {
        corpus.push_back(g);
        ++zero_found;
      }
    }
    while (corpus.size() < 50)
      corpus.push_back(random_graph(state, uniform_int(state, 1, 7), uniform_int(state, 0, 100)));

    Tally t;
    int zero_gamma = 0;
    const Graph k1 = complete_graph(1);
    for (const auto& g : corpus) {
      const auto base = solve_exact(g);
      const Graph joined = join(g, k1);
      const auto r = solve_exact(joined);
      ++t.instances;
      if (base.gamma == 0)
        ++zero_gamma;
      if (r.gamma < 1)
        t.fail(write_graph6(g), make_ce(joined, r.witness, Shows::SrdfBelow, 1));
      else if (base.gamma == 0 && r.gamma != 1)
        t.fail(write_graph6(g), make_ce(joined, r.witness, Shows::OptimumAbove, 1));
    }
    out.push_back(t.finish("join-k1-bound", "50 random graphs G, G v K1", {50},
                           {{"seed", opts.seed}, {"zero_gamma_instances", zero_gamma}}));
  }

  {
    Tally t;
    int pairs = 0;
    while (pairs < 50) {
      const Graph g = random_graph(state, uniform_int(state, 1, 4), uniform_int(state, 0, 100));
      const Graph h = random_graph(state, uniform_int(state, 1, 4), uniform_int(state, 0, 100));
      const auto rg = solve_exact(g);
      const auto rh = solve_exact(h);
      if (rg.gamma < 0 || rh.gamma < 0)
        continue;
      ++pairs;
      const Graph gh = join(g, h);
      const auto r = solve_exact(gh);
      ++t.instances;
      if (r.gamma > rg.gamma + rh.gamma)
        t.fail(write_graph6(g) + " v " + write_graph6(h), make_ce(gh, r.witness, Shows::OptimumAbove,
                                                                  rg.gamma + rh.gamma));
    }
    out.push_back(t.finish("join-subadditivity", "50 random pairs, orders<=4", {50}, {{"seed", opts.seed}}));
  }

  json side_sums = json::array();
  for (int m = 3; m <= 6; ++m) {
    for (int n = 3; n <= 6; ++n) {
      ClaimCheck c;
      c.claim_id = "join-cycles-bounds";
      c.instance = describe(FamilySpec::join_of_cycles(m, n));
      c.params = {m, n};
      const Graph g = join_of_cycles(m, n);
      const auto r = solve_exact(g);
      const auto v = r.witness.values();
      const int left = std::accumulate(v.begin(), v.begin() + m, 0);
      const int right = std::accumulate(v.begin() + m, v.end(), 0);
      c.evidence = {{"gamma", r.gamma}, {"witness", format_values(r.witness)}, {"side_sums", {left, right}}};
      side_sums.push_back({{"m", m}, {"n", n}, {"gamma", r.gamma}, {"side_sums", {left, right}}});
      if (r.gamma < 1) {
        c.status = ClaimStatus::Refuted;
        c.counterexample = make_ce(g, r.witness, Shows::SrdfBelow, 1);
      } else if (r.gamma > 4) {
        c.status = ClaimStatus::Refuted;
        c.counterexample = make_ce(g, r.witness, Shows::OptimumAbove, 4);
      }
      out.push_back(std::move(c));
    }
  }

  {
    ClaimCheck c;
    c.claim_id = "join-cycles-side-positivity";
    c.instance = "every SRDF on C_m v C_n, m,n>=13";
    c.params = {13, 13};
    c.status = ClaimStatus::SkippedScale;
    c.evidence["reason"] = "quantifies over all SRDFs of a graph of order >= 26";
    c.evidence["reduced_scale_optimal_witnesses"] = side_sums;
    out.push_back(std::move(c));
  }

  {
    ClaimCheck c;
    c.claim_id = "join-cycles-probe";
    c.instance = describe(FamilySpec::join_of_cycles(13, 13));
    c.params = {13, 13};
    c.evidence["node_budget"] = opts.probe_node_budget;
    c.evidence["claimed_value"] = 3;
    c.evidence["construction_upper_bound"] = construct_join_cycles_33(13, 13).claimed_weight;
    SolveOptions so;
    so.node_budget = opts.probe_node_budget;
    try {
      const auto r = solve_branch_and_bound(join_of_cycles(13, 13), so);
      c.evidence["gamma"] = r.gamma;
      c.evidence["nodes"] = r.nodes_explored;
      c.evidence["witness"] = format_values(r.witness);
      if (r.gamma != 3) {
        c.status = ClaimStatus::Refuted;
        c.counterexample = make_ce(join_of_cycles(13, 13), r.witness,
                                   r.gamma < 3 ? Shows::SrdfBelow : Shows::OptimumAbove, 3);
      }
    } catch (const BudgetExhausted& e) {
      c.status = ClaimStatus::SkippedScale;
      c.evidence["proven_lower_bound"] = e.lower_bound();
      c.evidence["upper_bound"] = e.upper_bound() ? json(*e.upper_bound()) : json(nullptr);
      c.evidence["nodes"] = e.nodes_explored();
    }
    out.push_back(std::move(c));
  }
  return out;
}

Suite parse_suite(const std::string& token) {
  static const std::map<std::string, Suite> names = {
      {"all", Suite::All},
      {"formulas", Suite::Formulas},
      {"constructions", Suite::Constructions},
      {"lemma36", Suite::NegativeNeighbour},
      {"structural", Suite::Structural},
  };
  auto it = names.find(token);
  if (it == names.end())
    throw ParameterError("unknown suite '" + token + "'");
  return it->second;
}

std::vector<ClaimCheck> run_suite(Suite suite, const SuiteOptions& opts) {
  std::vector<ClaimCheck> out;
  auto add = [&](std::vector<ClaimCheck> more) { out.insert(out.end(), more.begin(), more.end()); };
  if (suite == Suite::All || suite == Suite::Formulas)
    add(check_all_formulas(opts));
  if (suite == Suite::All || suite == Suite::Constructions)
    add(check_constructions(opts));
  if (suite == Suite::All || suite == Suite::NegativeNeighbour)
    for (int n : {13, 14, 15, 16})
      out.push_back(check_negative_neighbour(n, opts));
  if (suite == Suite::All || suite == Suite::Structural)
    add(check_structural(opts));
  std::stable_sort(out.begin(), out.end(), [](const ClaimCheck& a, const ClaimCheck& b) {
    return std::tie(a.claim_id, a.params) < std::tie(b.claim_id, b.params);
  });
  return out;
}

bool any_refuted(const std::vector<ClaimCheck>& checks) {
  return std::any_of(checks.begin(), checks.end(),
                     [](const ClaimCheck& c) { return c.status == ClaimStatus::Refuted; });
}

json to_json(const ClaimCheck& check) {
  json j;
  j["claim"] = check.claim_id;
  j["instance"] = check.instance;
  j["params"] = check.params;
  j["status"] = to_string(check.status);
  j["evidence"] = check.evidence;
  if (check.counterexample) {
    const auto& ce = *check.counterexample;
    j["counterexample"] = {
        {"graph", write_graph6(ce.graph)},
        {"values", format_values(ce.labeling)},
        {"shows", to_string(ce.shows)},
        {"reference", ce.reference},
        {"rechecked", recheck(ce)},
    };
  }
  return j;
}

}  // namespace srdf
