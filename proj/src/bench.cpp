#include "srmat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "srmat/antidist.hpp"
#include "srmat/kernels.hpp"

namespace srmat {
namespace {

template <SatWord T>
AntidistMat<T> random_matrix(std::size_t n, std::mt19937_64& rng, bool sparse) {
  AntidistMat<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t r = rng();
      // Closure inputs keep about half the entries empty so paths matter.
      if (sparse && (r & 1u)) continue;
      m.set_raw(i, j, static_cast<T>(r >> (64 - width_v<T>)));
    }
  }
  return m;
}

template <SatWord T>
std::uint64_t checksum(const AntidistMat<T>& m) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (T v : m.values()) {
    for (std::size_t b = 0; b < sizeof(T); ++b) {
      h ^= (static_cast<std::uint64_t>(v) >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  }
  return h;
}

template <SatWord T>
AntidistMat<T> run_once(BenchOp op, const AntidistMat<T>& a, const AntidistMat<T>& b) {
  return op == BenchOp::mul ? mul(a, b) : transclosure(a);
}

template <SatWord T>
BenchResult bench_width(const BenchOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  const bool closure = opts.op == BenchOp::closure;
  const auto a = random_matrix<T>(opts.size, rng, closure);
  const auto b = closure ? a : random_matrix<T>(opts.size, rng, false);
  const double updates = static_cast<double>(opts.size) * opts.size * opts.size;

  auto time_variant = [&](kernels::Isa isa, AntidistMat<T>& out) {
    kernels::ScopedIsa scope(isa);
    double best = 0;
    for (unsigned rep = 0; rep < std::max(1u, opts.repeats); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      out = run_once(opts.op, a, b);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (rep == 0 || s < best) best = s;
    }
    return best;
  };

  BenchResult result;
  result.vector_available = kernels::vector_supported();

  AntidistMat<T> scalar_out(1, 1);
  const double scalar_s = time_variant(kernels::Isa::scalar, scalar_out);
  result.output_checksum = checksum(scalar_out);
  result.reports.push_back({to_string(opts.op), opts.size, opts.width, "scalar", scalar_s, updates / scalar_s, 1.0});

  if (!result.vector_available) {
    result.notice = "vector path unavailable on this machine; scalar only";
    return result;
  }

  AntidistMat<T> vector_out(1, 1);
  const double vector_s = time_variant(kernels::Isa::sse41, vector_out);
  if (!(vector_out == scalar_out)) throw std::runtime_error("bench: scalar and vector results differ");
  result.outputs_equal = true;
  result.reports.push_back(
      {to_string(opts.op), opts.size, opts.width, "vector", vector_s, updates / vector_s, scalar_s / vector_s});
  return result;
}

}  // namespace

std::string to_string(BenchOp op) { return op == BenchOp::mul ? "mul" : "closure"; }

BenchResult run_bench(const BenchOptions& opts) {
  if (opts.size == 0) throw std::invalid_argument("bench: size must be positive");
  switch (opts.width) {
    case 8:
      return bench_width<std::uint8_t>(opts);
    case 16:
      return bench_width<std::uint16_t>(opts);
    case 32:
      return bench_width<std::uint32_t>(opts);
    default:
      throw std::invalid_argument("bench: width must be 8, 16 or 32");
  }
}

std::string format_report(const BenchReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "op=%s size=%zu width=%u variant=%s time=%.6fs throughput=%.3e/s speedup=%.2f",
                r.operation.c_str(), r.size, r.width, r.variant.c_str(), r.seconds, r.throughput, r.speedup);
  return buf;
}

}  // namespace srmat
