#include "srdf/families.hpp"

#include "srdf/solver.hpp"


namespace srdf {

std::string to_string(ClaimKind kind) { return kind == ClaimKind::ExactValue ? "exact" : "upper-bound"; }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok)
    throw ParameterError(what);
}

int mod3(int x) { return x % 3; }

std::string join_ints(const std::vector<Vertex>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

Construction finish(Graph graph, std::vector<int> values, int claimed, ClaimKind kind, std::string source) {
  Labeling labeling(std::move(values));
  const auto report = verify(graph, labeling);
  if (!report.valid)
    throw ConstructionError(source + ": labeling is not an SRDF (condition (a) fails at [" +
                                join_ints(report.condition_a_failures) + "], condition (b) fails at [" +
                                join_ints(report.condition_b_failures) + "])",
                            std::move(graph), std::move(labeling), claimed);
  if (report.weight != claimed)
    throw ConstructionError(source + ": weight " + std::to_string(report.weight) + " differs from claimed " +
                                std::to_string(claimed),
                            std::move(graph), std::move(labeling), claimed);
  return Construction{std::move(graph), std::move(labeling), claimed, kind, std::move(source)};
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_c3_case(int m, int n) { return (m == 3 && mod3(n) == 0) || (n == 3 && mod3(m) == 0); }

}  // namespace

std::vector<int> cycle_pattern_mod3(int length) {
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int p = 1; p <= length; ++p)
    out[static_cast<std::size_t>(p - 1)] = mod3(p) == 1 ? 2 : -1;
  return out;
}

std::vector<int> cycle_pattern_odd(int length) {
  require(length >= 3 && length % 2 == 1, "odd cycle pattern needs an odd length >= 3");
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int p = 1; p <= length; ++p)
    out[static_cast<std::size_t>(p - 1)] = p == 1 ? 2 : (p % 2 == 0 ? -1 : 1);
  return out;
}

std::vector<int> cycle_pattern_even(int length) {
  require(length >= 4 && length % 2 == 0, "even cycle pattern needs an even length >= 4");
  std::vector<int> out(static_cast<std::size_t>(length));
  for (int p = 1; p <= length; ++p)
    out[static_cast<std::size_t>(p - 1)] = (p == 1 || p == 3) ? 2 : (p % 2 == 0 ? -1 : 1);
  return out;
}

std::vector<int> cycle_pattern_sum2(int length) {
  require(length >= 3 && mod3(length) != 2, "sum-2 cycle pattern needs length >= 3, length != 2 (mod 3)");
  auto out = cycle_pattern_mod3(length);
  // length = 0 (mod 3): the last vertex is -1 and becomes 1.
  if (mod3(length) == 0)
    out.back() = 1;
  return out;
}

std::vector<int> cycle_pattern_sum1(int length) {
  require(length >= 4, "sum-1 cycle pattern needs length >= 4");
  auto out = cycle_pattern_mod3(length);
  const auto at = [&](int p) -> int& { return out[static_cast<std::size_t>(p - 1)]; };
  if (mod3(length) == 0) {
    at(length - 2) = 1;
    at(length - 1) = 1;
  } else if (mod3(length) == 1) {
    at(length) = 1;
  }
  return out;
}

std::vector<int> wheel_pattern(int n) {
  require(n >= 1 && n != 4, "weight-one wheel pattern needs n >= 1, n != 4");
  std::vector<int> out(static_cast<std::size_t>(n) + 1, -1);
  if (n % 2 == 1) {
    out[0] = 2;
    for (int i = 2; i <= n; i += 2)
      out[static_cast<std::size_t>(i)] = 1;
  } else if (mod3(n) == 0) {
    out[0] = 1;
    for (int i = 3; i <= n; i += 3)
      out[static_cast<std::size_t>(i)] = 2;
  } else if (mod3(n) == 1) {
    out[0] = 2;
    for (int i = 3; i <= n - 7; i += 3)
      out[static_cast<std::size_t>(i)] = 2;
    for (int i : {n - 4, n - 1, n})
      out[static_cast<std::size_t>(i)] = 1;
  } else {
    out[0] = 2;
    for (int i = 3; i <= n - 5; i += 3)
      out[static_cast<std::size_t>(i)] = 2;
    for (int i : {n - 2, n})
      out[static_cast<std::size_t>(i)] = 1;
  }
  return out;
}

Construction construct_c3_join_cycle(int n) {
  require(n >= 3 && mod3(n) == 0, "C3 join Cn construction needs n >= 3 and n = 0 (mod 3), got n=" + std::to_string(n));
  const std::vector<int> small = {1, 1, -1};
  const auto big = cycle_pattern_mod3(n);
  return finish(join_of_cycles(3, n), concat(small, big), 1, ClaimKind::ExactValue, "c3-join-mod3");
}

Construction construct_join_cycles_weight4(int m, int n) {
  require(m >= 3 && n >= 3, "weight-4 join construction needs m, n >= 3, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  const auto side = [](int len) { return len % 2 ? cycle_pattern_odd(len) : cycle_pattern_even(len); };
  const auto a = side(m);
  const auto b = side(n);
  return finish(join_of_cycles(m, n), concat(a, b), 4, ClaimKind::UpperBound, "join-cycles-parity");
}

Construction construct_join_cycles_22(int m, int n) {
  require(m >= 13 && n >= 13 && mod3(m) == 2 && mod3(n) == 2,
          "needs m, n >= 13 with m = n = 2 (mod 3), got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  const auto a = cycle_pattern_mod3(m);
  const auto b = cycle_pattern_mod3(n);
  return finish(join_of_cycles(m, n), concat(a, b), 2, ClaimKind::ExactValue, "join-cycles-mod3");
}

Construction construct_join_cycles_23(int m, int n) {
  require(m >= 13 && n >= 13 && mod3(m) == 2 && mod3(n) != 2,
          "needs m, n >= 13 with m = 2 and n != 2 (mod 3), got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  const auto a = cycle_pattern_mod3(m);
  const auto b = cycle_pattern_sum2(n);
  return finish(join_of_cycles(m, n), concat(a, b), 3, ClaimKind::ExactValue,
                mod3(n) == 0 ? "join-cycles-mod3-last-one" : "join-cycles-mod3-sum2");
}

Construction construct_join_cycles_33(int m, int n) {
  require(m >= 13 && n >= 13 && mod3(m) != 2 && mod3(n) != 2,
          "needs m, n >= 13 with m, n != 2 (mod 3), got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  const auto a = cycle_pattern_sum1(m);
  const auto b = cycle_pattern_sum2(n);
  return finish(join_of_cycles(m, n), concat(a, b), 3, ClaimKind::ExactValue, "join-cycles-sum1-sum2");
}

Construction construct_wheel(int n) {
  require(n >= 3, "wheel construction needs n >= 3, got n=" + std::to_string(n));
  if (n == 4)
    return finish(wheel_graph(4), {2, 1, -1, 1, -1}, 2, ClaimKind::ExactValue, "wheel-4");
  std::string tag = n % 2 ? "wheel-odd" : "wheel-even-mod3-" + std::to_string(mod3(n));
  return finish(wheel_graph(n), wheel_pattern(n), 1, ClaimKind::ExactValue, tag);
}

Construction construct_fan(int n) {
  require(n >= 1, "fan construction needs n >= 1, got n=" + std::to_string(n));
  if (n == 2)
    return finish(fan_graph(2), {2, -1, 1}, 2, ClaimKind::ExactValue, "fan-2");
  if (n == 4)
    return finish(fan_graph(4), {2, -1, 1, -1, 1}, 2, ClaimKind::ExactValue, "fan-4");

  const Graph g = fan_graph(n);
  const auto base = wheel_pattern(n);
  std::vector<int> values(base.size());
  values[0] = base[0];
  for (int r = 0; r < n; ++r) {
    for (int p = 1; p <= n; ++p)
      values[static_cast<std::size_t>(p)] = base[static_cast<std::size_t>((p - 1 + r) % n + 1)];
    if (is_srdf(g, values))
      return finish(g, values, 1, ClaimKind::ExactValue, "fan-from-wheel-rot" + std::to_string(r));
  }
  if (g.order() <= 16) {
    auto solved = solve_exact(g);
    if (solved.gamma == 1) {
      auto v = solved.witness.values();
      return finish(g, std::vector<int>(v.begin(), v.end()), 1, ClaimKind::ExactValue, "fan-solver");
    }
  }
  values.assign(base.begin(), base.end());
  throw ConstructionError("no weight-one fan labeling found for n=" + std::to_string(n), g, Labeling(values), 1);
}

Construction construct_friendship(int m) {
  require(m >= 1, "friendship construction needs m >= 1, got m=" + std::to_string(m));
  std::vector<int> values(static_cast<std::size_t>(2 * m + 1));
  values[0] = 2;
  for (int i = 0; i < m; ++i) {
    values[static_cast<std::size_t>(2 * i + 1)] = 1;
    values[static_cast<std::size_t>(2 * i + 2)] = -1;
  }
  return finish(friendship_graph(m), std::move(values), 2, ClaimKind::ExactValue, "friendship-hub");
}

Construction construct(const FamilySpec& spec) {
  validate(spec);
  switch (spec.kind) {
  case FamilyKind::Wheel: return construct_wheel(spec.n);
  case FamilyKind::Fan: return construct_fan(spec.n);
  case FamilyKind::Friendship: return construct_friendship(spec.m);
  case FamilyKind::JoinOfCycles: {
    const int m = spec.m;
    const int n = spec.n;
    if (m == 3 && mod3(n) == 0)
      return construct_c3_join_cycle(n);
    if (n == 3 && mod3(m) == 0) {
      auto c = construct_c3_join_cycle(m);
      auto v = c.labeling.values();
      std::vector<int> mirrored(v.begin() + 3, v.end());
      mirrored.insert(mirrored.end(), v.begin(), v.begin() + 3);
      return finish(join_of_cycles(m, n), mirrored, 1, ClaimKind::ExactValue, "c3-join-mod3-mirrored");
    }
    if (m >= 13 && n >= 13) {
      if (mod3(m) == 2 && mod3(n) == 2)
        return construct_join_cycles_22(m, n);
      if (mod3(m) == 2)
        return construct_join_cycles_23(m, n);
      if (mod3(n) == 2) {
        auto a = cycle_pattern_sum2(m);
        return finish(join_of_cycles(m, n), concat(a, cycle_pattern_mod3(n)), 3, ClaimKind::ExactValue,
                      "join-cycles-mod3-mirrored");
      }
      return construct_join_cycles_33(m, n);
    }
    return construct_join_cycles_weight4(m, n);
  }
  default:
    throw ParameterError("no explicit construction for " + describe(spec) + "; use solve");
  }
}

std::optional<int> gamma_formula(const FamilySpec& spec) {
  try {
    validate(spec);
  } catch (const ParameterError&) {
    return std::nullopt;
  }
  const int n = spec.n;
  switch (spec.kind) {
  case FamilyKind::Path: return n == 1 ? 1 : (2 * n) / 3;
  case FamilyKind::Cycle: return (2 * n + 2) / 3;
  case FamilyKind::Complete: return n == 3 ? 2 : 1;
  case FamilyKind::Empty: return n >= 1 ? std::optional<int>(n) : std::nullopt;
  case FamilyKind::MatchingCopies: return std::nullopt;
  case FamilyKind::Wheel: return n == 4 ? 2 : 1;
  case FamilyKind::Fan: return (n == 2 || n == 4) ? 2 : 1;
  case FamilyKind::Friendship: return 2;
  case FamilyKind::JoinOfCycles: {
    const int m = spec.m;
    if (is_c3_case(m, n))
      return 1;
    if (m >= 13 && n >= 13)
      return (mod3(m) == 2 && mod3(n) == 2) ? 2 : 3;
    return std::nullopt;
  }
  }
  return std::nullopt;
}

}  // namespace srdf
