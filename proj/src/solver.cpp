#include "srdf/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <numeric>
#include <thread>

namespace srdf {

std::string to_string(SolveMethod method) {
  return method == SolveMethod::Exhaustive ? "exhaustive" : "branch-and-bound";
}

BudgetExhausted::BudgetExhausted(int lower_bound, std::optional<int> upper_bound, std::optional<Labeling> incumbent,
                                 std::uint64_t nodes_explored)
    : std::runtime_error("node budget exhausted after " + std::to_string(nodes_explored) +
                         " nodes; proven lower bound " + std::to_string(lower_bound) +
                         (upper_bound ? ", best upper bound " + std::to_string(*upper_bound) : std::string{})),
      lower_bound_(lower_bound),
      upper_bound_(upper_bound),
      incumbent_(std::move(incumbent)),
      nodes_explored_(nodes_explored) {}

namespace {

constexpr int kBranchValues[] = {2, 1, -1};

int ceil_div(long long num, long long den) {
  return static_cast<int>(num >= 0 ? (num + den - 1) / den : -((-num) / den));
}

void require_nonempty(const Graph& g) {
  if (g.order() < 1)
    throw ParameterError("cannot solve the order-0 graph");
}

int global_lower_bound(const Graph& g) {
  return std::max({lower_bound_universal(g), lower_bound_degree_sum(g), -g.order()});
}

// State shared by every worker of one branch-and-bound run.
struct SharedSearch {
  explicit SharedSearch(int n, int lb, std::optional<std::uint64_t> cap)
      : incumbent(n + 1), frontier_lb(INT_MAX), budget(cap), global_lb(lb) {}

  std::atomic<int> incumbent;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::atomic<bool> finished{false};
  std::atomic<int> frontier_lb;
  std::optional<std::uint64_t> budget;
  int global_lb;

  std::mutex mutex;
  std::vector<int> witness;

  void offer(int w, std::span<const int> values) {
    std::lock_guard lock(mutex);
    if (w < incumbent.load()) {
      witness.assign(values.begin(), values.end());
      incumbent.store(w);
      if (w <= global_lb)
        finished.store(true);
    }
  }

  void lower_frontier(int b) {
    int current = frontier_lb.load();
    while (b < current && !frontier_lb.compare_exchange_weak(current, b)) {
    }
  }

  // Counts one node; returns false once the budget is spent.
  bool count_node() {
    if (aborted.load())
      return false;
    const auto n = nodes.fetch_add(1) + 1;
    if (budget && n > *budget) {
      aborted.store(true);
      return false;
    }
    return true;
  }
};

// Incremental partial-assignment state. Value 0 marks an unassigned vertex.
class Search {
public:
  Search(const Graph& g, std::span<const Vertex> branch_order, SharedSearch& shared)
      : g_(g),
        order_(branch_order),
        shared_(shared),
        n_(g.order()),
        max_deg_(max_degree(g)),
        value_(static_cast<std::size_t>(n_), 0),
        assigned_sum_(static_cast<std::size_t>(n_), 0),
        unassigned_closed_(static_cast<std::size_t>(n_)),
        unassigned_open_(static_cast<std::size_t>(n_)),
        two_open_(static_cast<std::size_t>(n_), 0),
        deg_gap_(static_cast<std::size_t>(n_)),
        unassigned_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      const auto i = static_cast<std::size_t>(v);
      unassigned_open_[i] = g.degree(v);
      unassigned_closed_[i] = g.degree(v) + 1;
      deg_gap_[i] = max_deg_ - g.degree(v);
      degree_slack_ -= deg_gap_[i];
    }
  }

  // Applies the assignment and reports whether the partial labeling can still
  // be completed to an SRDF. The caller must unassign either way.
  bool assign(Vertex u, int c) {
    const auto ui = static_cast<std::size_t>(u);
    value_[ui] = c;
    partial_ += c;
    --unassigned_;
    degree_slack_ += static_cast<long long>(deg_gap_[ui]) * (c + 1);
    assigned_sum_[ui] += c;
    --unassigned_closed_[ui];
    for (Vertex x : g_.neighbors(u)) {
      const auto xi = static_cast<std::size_t>(x);
      assigned_sum_[xi] += c;
      --unassigned_closed_[xi];
      --unassigned_open_[xi];
      if (c == 2)
        ++two_open_[xi];
    }
    if (!locally_feasible(u))
      return false;
    for (Vertex x : g_.neighbors(u))
      if (!locally_feasible(x))
        return false;
    return true;
  }

  void unassign(Vertex u) {
    const auto ui = static_cast<std::size_t>(u);
    const int c = value_[ui];
    for (Vertex x : g_.neighbors(u)) {
      const auto xi = static_cast<std::size_t>(x);
      assigned_sum_[xi] -= c;
      ++unassigned_closed_[xi];
      ++unassigned_open_[xi];
      if (c == 2)
        --two_open_[xi];
    }
    assigned_sum_[ui] -= c;
    ++unassigned_closed_[ui];
    degree_slack_ -= static_cast<long long>(deg_gap_[ui]) * (c + 1);
    ++unassigned_;
    partial_ -= c;
    value_[ui] = 0;
  }

  // Lower bound on the weight of any feasible completion.
  int bound() const {
    const int trivial = partial_ - unassigned_;
    const int degree_sum = ceil_div(n_ + degree_slack_, max_deg_ + 1);
    return std::max(trivial, degree_sum);
  }

  void dfs(std::size_t depth) {
    if (depth == order_.size()) {
      if (partial_ < shared_.incumbent.load())
        shared_.offer(partial_, value_);
      return;
    }
    const Vertex u = order_[depth];
    for (int c : kBranchValues) {
      if (shared_.finished.load())
        return;
      const bool counted = shared_.count_node();
      if (assign(u, c)) {
        const int b = bound();
        if (b < shared_.incumbent.load()) {
          if (counted)
            dfs(depth + 1);
          else
            shared_.lower_frontier(b);
        }
      }
      unassign(u);
    }
  }

  std::span<const int> values() const { return value_; }

private:
  bool locally_feasible(Vertex x) const {
    const auto xi = static_cast<std::size_t>(x);
    if (assigned_sum_[xi] + 2 * unassigned_closed_[xi] < 1)
      return false;
    if (value_[xi] == -1 && unassigned_open_[xi] == 0 && two_open_[xi] == 0)
      return false;
    return true;
  }

  const Graph& g_;
  std::span<const Vertex> order_;
  SharedSearch& shared_;
  int n_;
  int max_deg_;
  std::vector<int> value_;
  std::vector<int> assigned_sum_;
  std::vector<int> unassigned_closed_;
  std::vector<int> unassigned_open_;
  std::vector<int> two_open_;
  std::vector<int> deg_gap_;
  long long degree_slack_ = 0;
  int partial_ = 0;
  int unassigned_;
};

std::vector<Vertex> branching_order(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Feasible value prefixes for the first `depth` branching vertices, in search order.
std::vector<std::vector<int>> split_prefixes(const Graph& g, std::span<const Vertex> order, std::size_t depth) {
  SharedSearch scratch(g.order(), INT_MIN, std::nullopt);
  Search search(g, order, scratch);
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  auto rec = [&](auto&& self, std::size_t d) -> void {
    if (d == depth) {
      out.push_back(prefix);
      return;
    }
    for (int c : kBranchValues) {
      if (search.assign(order[d], c)) {
        prefix.push_back(c);
        self(self, d + 1);
        prefix.pop_back();
      }
      search.unassign(order[d]);
    }
  };
  rec(rec, 0);
  return out;
}

void run_parallel(const Graph& g, std::span<const Vertex> order, SharedSearch& shared, unsigned threads) {
  std::size_t depth = 0;
  std::size_t leaves = 1;
  while (depth < order.size() && leaves < 8 * static_cast<std::size_t>(threads)) {
    ++depth;
    leaves *= 3;
  }
  const auto tasks = split_prefixes(g, order, depth);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    Search search(g, order, shared);
    for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
      if (shared.finished.load())
        return;
      const auto& prefix = tasks[t];
      for (std::size_t d = 0; d < prefix.size(); ++d)
        search.assign(order[d], prefix[d]);
      const int b = search.bound();
      if (b < shared.incumbent.load()) {
        if (shared.aborted.load())
          shared.lower_frontier(b);
        else
          search.dfs(prefix.size());
      }
      for (std::size_t d = prefix.size(); d-- > 0;)
        search.unassign(order[d]);
    }
  };

  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < threads; ++i)
    pool.emplace_back(worker);
}

}  // namespace

int lower_bound_universal(const Graph& g) {
  require_nonempty(g);
  return has_universal_vertex(g) ? 1 : -g.order();
}

int lower_bound_degree_sum(const Graph& g) {
  require_nonempty(g);
  const int delta = max_degree(g);
  long long num = g.order();
  for (Vertex v = 0; v < g.order(); ++v)
    num -= delta - g.degree(v);
  return ceil_div(num, delta + 1);
}

SolveResult solve_exhaustive(const Graph& g, std::optional<std::uint64_t> node_budget) {
  require_nonempty(g);
  const auto start = std::chrono::steady_clock::now();
  const auto n = static_cast<std::size_t>(g.order());

  std::vector<int> values(n, -1);
  int w = -static_cast<int>(n);
  int best = INT_MAX;
  std::vector<int> witness;
  std::uint64_t visited = 0;

  while (true) {
    ++visited;
    if (node_budget && visited > *node_budget) {
      std::optional<Labeling> inc;
      std::optional<int> ub;
      if (!witness.empty()) {
        inc = Labeling(witness);
        ub = best;
      }
      throw BudgetExhausted(global_lower_bound(g), ub, std::move(inc), visited - 1);
    }
    if (w < best && is_srdf(g, values)) {
      best = w;
      witness = values;
    }
    // Odometer step, last vertex fastest: -1 -> 1 -> 2 -> carry.
    std::size_t i = n;
    while (i > 0) {
      int& v = values[i - 1];
      if (v == -1) {
        v = 1;
        w += 2;
        break;
      }
      if (v == 1) {
        v = 2;
        w += 1;
        break;
      }
      v = -1;
      w -= 3;
      --i;
    }
    if (i == 0)
      break;
  }

  SolveResult result;
  result.gamma = best;
  result.witness = Labeling(std::move(witness));
  result.nodes_explored = visited;
  result.method = SolveMethod::Exhaustive;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SolveResult solve_branch_and_bound(const Graph& g, const SolveOptions& opts) {
  require_nonempty(g);
  const auto start = std::chrono::steady_clock::now();
  const auto order = branching_order(g);
  SharedSearch shared(g.order(), global_lower_bound(g), opts.node_budget);

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  if (opts.deterministic || threads == 1) {
    Search search(g, order, shared);
    search.dfs(0);
  } else {
    run_parallel(g, order, shared, threads);
  }

  const int incumbent = shared.incumbent.load();
  const bool have_witness = !shared.witness.empty();
  if (shared.aborted.load() && !shared.finished.load()) {
    const int lb = std::max(shared.global_lb, std::min(incumbent, shared.frontier_lb.load()));
    if (!have_witness || lb < incumbent) {
      std::optional<Labeling> inc;
      std::optional<int> ub;
      if (have_witness) {
        inc = Labeling(shared.witness);
        ub = incumbent;
      }
      throw BudgetExhausted(lb, ub, std::move(inc), std::min(shared.nodes.load(), *opts.node_budget));
    }
  }
  if (!have_witness || !is_srdf(g, shared.witness))
    throw std::logic_error("branch-and-bound finished without a valid witness");

  SolveResult result;
  result.gamma = incumbent;
  result.witness = Labeling(shared.witness);
  result.nodes_explored = opts.node_budget ? std::min(shared.nodes.load(), *opts.node_budget) : shared.nodes.load();
  result.method = SolveMethod::BranchAndBound;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SolveResult solve_exact(const Graph& g, const SolveOptions& opts) {
  if (opts.exhaustive_threshold < 1)
    throw ParameterError("exhaustive_threshold must be at least 1");
  require_nonempty(g);
  if (g.order() <= opts.exhaustive_threshold)
    return solve_exhaustive(g, opts.node_budget);
  return solve_branch_and_bound(g, opts);
}

std::uint64_t enumerate_labelings(const Graph& g, const LabelingFilter& filter, const LabelingVisitor& visitor) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> values(n, -1);
  std::uint64_t count = 0;
  while (true) {
    if (filter(values)) {
      visitor(values);
      ++count;
    }
    std::size_t i = n;
    while (i > 0) {
      int& v = values[i - 1];
      if (v != 2) {
        v = v == -1 ? 1 : 2;
        break;
      }
      v = -1;
      --i;
    }
    if (i == 0)
      return count;
  }
}

std::uint64_t enumerate_labelings_with_weight(const Graph& g, int target, const LabelingVisitor& visitor) {
  const int n = g.order();
  std::vector<int> values(static_cast<std::size_t>(n), -1);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int depth, int partial) -> void {
    const int remaining = n - depth;
    if (partial - remaining > target || partial + 2 * remaining < target)
      return;
    if (remaining == 0) {
      visitor(values);
      ++count;
      return;
    }
    for (int c : {-1, 1, 2}) {
      values[static_cast<std::size_t>(depth)] = c;
      self(self, depth + 1, partial + c);
    }
    values[static_cast<std::size_t>(depth)] = -1;
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace srdf
