#include "srdf/labeling.hpp"

#include <numeric>
#include <sstream>

namespace srdf {

Labeling::Labeling(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!is_label_value(values_[i]))
      throw ParameterError("vertex " + std::to_string(i) + " has value " + std::to_string(values_[i]) +
                           "; labels must be -1, 1 or 2");
}

Labeling Labeling::uniform(int n, int value) {
  return Labeling(std::vector<int>(static_cast<std::size_t>(n), value));
}

std::vector<Vertex> Labeling::vertices_with(int value) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] == value)
      out.push_back(static_cast<Vertex>(i));
  return out;
}

int weight(const Labeling& f) {
  auto v = f.values();
  return std::accumulate(v.begin(), v.end(), 0);
}

int sum_over(const Labeling& f, std::span<const Vertex> vertices) {
  int total = 0;
  for (Vertex v : vertices)
    total += f[v];
  return total;
}

namespace {

void check_length(const Graph& g, std::size_t n) {
  if (n != static_cast<std::size_t>(g.order()))
    throw LengthMismatch("labeling has " + std::to_string(n) + " values but the graph has " +
                         std::to_string(g.order()) + " vertices");
}

int raw_closed_sum(const Graph& g, std::span<const int> values, Vertex v) {
  int total = values[static_cast<std::size_t>(v)];
  for (Vertex u : g.neighbors(v))
    total += values[static_cast<std::size_t>(u)];
  return total;
}

bool has_two_neighbor(const Graph& g, std::span<const int> values, Vertex v) {
  for (Vertex u : g.neighbors(v))
    if (values[static_cast<std::size_t>(u)] == 2)
      return true;
  return false;
}

}  // namespace

int closed_sum(const Graph& g, const Labeling& f, Vertex v) {
  check_length(g, f.size());
  return raw_closed_sum(g, f.values(), v);
}

VerificationReport verify(const Graph& g, const Labeling& f) {
  check_length(g, f.size());
  VerificationReport report;
  report.weight = weight(f);
  report.per_vertex_closed_sums.reserve(f.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    const int sum = raw_closed_sum(g, f.values(), v);
    report.per_vertex_closed_sums.push_back(sum);
    if (sum < 1)
      report.condition_a_failures.push_back(v);
    if (f[v] == -1 && !has_two_neighbor(g, f.values(), v))
      report.condition_b_failures.push_back(v);
  }
  report.valid = report.condition_a_failures.empty() && report.condition_b_failures.empty();
  return report;
}

bool is_srdf(const Graph& g, std::span<const int> values) {
  check_length(g, values.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (raw_closed_sum(g, values, v) < 1)
      return false;
    if (values[static_cast<std::size_t>(v)] == -1 && !has_two_neighbor(g, values, v))
      return false;
  }
  return true;
}

std::string format_values(const Labeling& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(f[static_cast<Vertex>(i)]);
  }
  return out;
}

Labeling parse_values(const std::string& text) {
  std::vector<int> values;
  if (text.empty())
    return Labeling(values);
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token == "-1")
      values.push_back(-1);
    else if (token == "1")
      values.push_back(1);
    else if (token == "2")
      values.push_back(2);
    else
      throw ParameterError("bad label token '" + token + "' at position " + std::to_string(values.size()) +
                           "; expected -1, 1 or 2");
  }
  if (text.back() == ',')
    throw ParameterError("trailing comma in label list");
  return Labeling(std::move(values));
}

}  // namespace srdf
