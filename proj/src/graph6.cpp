#include "srdf/graph6.hpp"

#include <vector>

namespace srdf {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxShortOrder = 62;
constexpr std::uint64_t kMaxMediumOrder = 258047;
// Graph stores vertex indices as int; this also keeps the bit matrix sane.
constexpr std::uint64_t kMaxParseOrder = 1u << 20;

class Reader {
public:
  explicit Reader(std::string_view body) : body_(body) {}

  int next() {
    if (pos_ >= body_.size())
      throw Graph6Error("truncated graph6 input", pos_);
    const auto c = static_cast<unsigned char>(body_[pos_]);
    if (c < 63 || c > 126)
      throw Graph6Error("malformed graph6 character 0x" + hex(c), pos_);
    ++pos_;
    return c - 63;
  }

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == body_.size(); }

private:
  static std::string hex(unsigned char c) {
    static constexpr char digits[] = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 15]};
  }

  std::string_view body_;
  std::size_t pos_ = 0;
};

std::uint64_t read_groups(Reader& in, int groups) {
  std::uint64_t value = 0;
  for (int i = 0; i < groups; ++i)
    value = (value << 6) | static_cast<std::uint64_t>(in.next());
  return value;
}

void write_groups(std::string& out, std::uint64_t value, int groups) {
  for (int i = groups - 1; i >= 0; --i)
    out += static_cast<char>(63 + ((value >> (6 * i)) & 63));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.substr(0, kHeader.size()) == kHeader)
    text.remove_prefix(kHeader.size());

  Reader in(text);
  std::uint64_t order = 0;
  const int first = in.next();
  if (first != 63) {
    order = static_cast<std::uint64_t>(first);
  } else {
    const std::size_t at = in.pos();
    const int second = in.next();
    if (second != 63) {
      order = (static_cast<std::uint64_t>(second) << 12) | read_groups(in, 2);
      if (order <= kMaxShortOrder)
        throw Graph6Error("non-canonical order encoding", at);
    } else {
      order = read_groups(in, 6);
      if (order <= kMaxMediumOrder)
        throw Graph6Error("non-canonical order encoding", at);
    }
  }
  if (order > kMaxParseOrder)
    throw Graph6Error("graph order " + std::to_string(order) + " exceeds supported maximum", 0);

  const auto n = static_cast<int>(order);
  std::vector<std::pair<Vertex, Vertex>> edges;
  int chunk = 0;
  int bits_left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        chunk = in.next();
        bits_left = 6;
      }
      --bits_left;
      if ((chunk >> bits_left) & 1)
        edges.emplace_back(i, j);
    }
  }
  if (bits_left > 0 && (chunk & ((1 << bits_left) - 1)) != 0)
    throw Graph6Error("nonzero padding bits", in.pos() - 1);
  if (!in.done())
    throw Graph6Error("trailing bytes after graph6 data", in.pos());
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= kMaxShortOrder) {
    out += static_cast<char>(63 + n);
  } else if (n <= kMaxMediumOrder) {
    out += '~';
    write_groups(out, n, 3);
  } else {
    out += "~~";
    write_groups(out, n, 6);
  }
  int chunk = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + chunk);
        chunk = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0)
    out += static_cast<char>(63 + (chunk << (6 - bits)));
  return out;
}

}  // namespace srdf
