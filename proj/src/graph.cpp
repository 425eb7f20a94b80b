#include "srmat/graph.hpp"

#include <charconv>
#include <sstream>

namespace srmat {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view field, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

GraphSpec parse_edge_list(std::string_view text, std::uint64_t max_weight) {
  GraphSpec g;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (fields[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (fields.size() != 2) throw ParseError(line_no, "expected 'p <vertex_count>'");
      g.vertex_count = parse_uint(fields[1], line_no, "vertex count");
      if (g.vertex_count == 0) throw ParseError(line_no, "vertex count must be positive");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "edge before 'p <vertex_count>' header");
    if (fields.size() < 2 || fields.size() > 3) throw ParseError(line_no, "expected '<source> <target> [<weight>]'");

    Edge e;
    e.source = parse_uint(fields[0], line_no, "vertex");
    e.target = parse_uint(fields[1], line_no, "vertex");
    for (std::size_t v : {e.source, e.target}) {
      if (v >= g.vertex_count) {
        throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range [0, " +
                                      std::to_string(g.vertex_count) + ")");
      }
    }
    if (fields.size() == 3) {
      e.weight = parse_uint(fields[2], line_no, "weight");
      if (e.weight > max_weight) {
        throw ParseError(line_no, "weight " + std::to_string(e.weight) + " exceeds maximum " +
                                      std::to_string(max_weight));
      }
      g.weighted = true;
    }
    g.edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no, "missing 'p <vertex_count>' header");
  return g;
}

void check_weights(const GraphSpec& g, std::uint64_t max_weight) {
  for (const Edge& e : g.edges) {
    if (e.weight > max_weight) {
      throw std::out_of_range("edge " + std::to_string(e.source) + "->" + std::to_string(e.target) + ": weight " +
                              std::to_string(e.weight) + " exceeds maximum " + std::to_string(max_weight));
    }
  }
}

std::string to_edge_list(const GraphSpec& g) {
  std::ostringstream os;
  os << "p " << g.vertex_count << '\n';
  for (const Edge& e : g.edges) os << e.source << ' ' << e.target << ' ' << e.weight << '\n';
  return os.str();
}

}  // namespace srmat
