#pragma once

// Scalar-vs-vector timing of the anti-distance multiply and closure.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace srmat {

enum class BenchOp { mul, closure };

struct BenchOptions {
  BenchOp op = BenchOp::mul;
  std::size_t size = 256;
  unsigned width = 8;
  std::uint64_t seed = 1;
  /// Each variant is timed this many times; the fastest run is reported.
  unsigned repeats = 1;
};

struct BenchReport {
  std::string operation;
  std::size_t size = 0;
  unsigned width = 0;
  std::string variant;  // "scalar" or "vector"
  double seconds = 0;
  /// Semiring updates (size^3) per second.
  double throughput = 0;
  /// scalar seconds / this variant's seconds.
  double speedup = 1;
};

struct BenchResult {
  std::vector<BenchReport> reports;
  bool vector_available = false;
  /// Scalar and vector outputs were compared and matched.
  bool outputs_equal = false;
  /// FNV-1a hash of the scalar output's entries.
  std::uint64_t output_checksum = 0;
  std::string notice;
};

/// Runs the forced-scalar and (when available) vector paths on the same
/// seeded input. Throws std::invalid_argument for bad options and
/// std::runtime_error when the two outputs differ.
BenchResult run_bench(const BenchOptions& opts);

std::string format_report(const BenchReport& r);

std::string to_string(BenchOp op);

}  // namespace srmat
