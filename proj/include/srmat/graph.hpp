#pragma once

// Weighted directed edge lists and the text format they are read from:
//
//   # comment
//   p <vertex_count>
//   <source> <target> [<weight>]
//
// Unweighted edges get weight 1.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srmat {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::uint64_t weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphSpec {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  /// Set when at least one edge line carried an explicit weight.
  bool weighted = false;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses and validates an edge list. Weights above max_weight are rejected,
/// never clamped.
GraphSpec parse_edge_list(std::string_view text, std::uint64_t max_weight = 0xffffffffu);

/// Checks every weight against max_weight; throws std::out_of_range naming
/// the first offending edge.
void check_weights(const GraphSpec& g, std::uint64_t max_weight);

std::string to_edge_list(const GraphSpec& g);

}  // namespace srmat
