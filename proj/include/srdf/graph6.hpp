#pragma once

#include "srdf/graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace srdf {

/// Malformed or truncated graph6 input. offset() is the byte position of the
/// problem within the line (after any header).
class Graph6Error : public std::runtime_error {
public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Parses one graph6 line. Accepts an optional ">>graph6<<" header and a
/// trailing newline. Padding bits must be zero.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 line, no header, no newline.
std::string write_graph6(const Graph& g);

}  // namespace srdf
