#pragma once

// Subcommand logic for the srmat tool, kept apart from argument parsing so
// it can be tested directly.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "srmat/bench.hpp"
#include "srmat/graph.hpp"
#include "srmat/io.hpp"

namespace srmat::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClosureOptions {
  bool boolean = false;
  std::optional<unsigned> width;  // default 8
  bool reflexive = false;
  bool dist = false;
};

struct OutputOptions {
  bool binary = false;
  std::string path;  // empty or "-" for standard output
};

/// Throws UsageError for conflicting flags.
void validate(const ClosureOptions& opts);

/// Largest edge weight accepted for the options.
std::uint64_t max_weight(const ClosureOptions& opts);

AnyMatrix closure(const GraphSpec& g, const ClosureOptions& opts);

/// A * B for anti-distance and Boolean matrices, the min-plus product for
/// distance matrices. Throws UsageError on type or shape mismatch.
AnyMatrix multiply(const AnyMatrix& a, const AnyMatrix& b);

/// Flips an anti-distance matrix to its distance dual and back.
AnyMatrix negate(const AnyMatrix& m);

void emit(const AnyMatrix& m, const OutputOptions& out, std::ostream& stdout_stream);

std::string read_text_input(const std::string& path);

/// Prints one report line per variant; returns the process exit code.
int bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace srmat::cli
