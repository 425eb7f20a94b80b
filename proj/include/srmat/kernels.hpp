#pragma once

// Lane-parallel primitives over 128-bit blocks.
//
// A LaneBlock<T> holds 16 / 8 / 4 lanes of 8 / 16 / 32 bit words. Every
// primitive exists in two implementations, a lane-by-lane scalar fallback and
// an SSE4.1 path, and both must agree bit for bit. The active implementation
// is chosen once at startup from the CPU capabilities; setting the
// environment variable SRMAT_FORCE_SCALAR to a non-empty value other than "0"
// selects the scalar fallback, and force_isa() overrides either choice.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "srmat/semiring.hpp"

namespace srmat {

inline constexpr std::size_t lane_block_bytes = 16;

template <SatWord T>
inline constexpr std::size_t lanes_v = lane_block_bytes / sizeof(T);

template <SatWord T>
struct alignas(lane_block_bytes) LaneBlock {
  static constexpr std::size_t lanes = lanes_v<T>;
  std::array<T, lanes> lane{};

  friend constexpr bool operator==(const LaneBlock&, const LaneBlock&) = default;
};

namespace kernels {

enum class Isa { scalar, sse41 };

std::string_view isa_name(Isa isa);

/// True when the vector path was compiled in and the CPU supports it.
bool vector_supported();

/// Implementation selected by detection and SRMAT_FORCE_SCALAR.
Isa detected_isa();

/// Implementation currently used by the matrix operations.
Isa active_isa();

/// Overrides the selection; std::nullopt restores detection. Requesting the
/// vector path on a machine without it throws std::runtime_error.
void force_isa(std::optional<Isa> isa);

/// Restores the previous selection on destruction.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa);
  ~ScopedIsa();
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  std::optional<Isa> previous_;
};

// Row spans passed to the row kernels have a length that is a multiple of
// lanes_v<T>; dst may alias a source.
template <SatWord T>
struct KernelTable {
  using Block = LaneBlock<T>;

  Block (*clonenot)(T e);
  Block (*subsat)(Block a, Block b);
  Block (*maxlanes)(Block a, Block b);
  Block (*minlanes)(Block a, Block b);
  Block (*addsat)(Block a, Block b);
  Block (*absdiff)(Block a, Block b);

  // dst[j] = max(dst[j], subsat(src[j], S - e)): one anti-distance update.
  void (*update_max_mul)(std::span<T> dst, std::span<const T> src, T e);
  // dst[j] = min(dst[j], addsat(src[j], d)): one distance update.
  void (*update_min_add)(std::span<T> dst, std::span<const T> src, T d);

  void (*row_max)(std::span<T> dst, std::span<const T> a, std::span<const T> b);
  void (*row_min)(std::span<T> dst, std::span<const T> a, std::span<const T> b);
  void (*row_absdiff)(std::span<T> dst, std::span<const T> a, std::span<const T> b);
  void (*row_not)(std::span<T> dst, std::span<const T> a);
};

/// Table for a specific implementation. Throws std::runtime_error for the
/// vector path when it is unavailable.
template <SatWord T>
const KernelTable<T>& table_for(Isa isa);

/// Table for active_isa().
template <SatWord T>
const KernelTable<T>& active_table();

template <SatWord T>
LaneBlock<T> clonenot(T e) {
  return active_table<T>().clonenot(e);
}
template <SatWord T>
LaneBlock<T> subsat(LaneBlock<T> a, LaneBlock<T> b) {
  return active_table<T>().subsat(a, b);
}
template <SatWord T>
LaneBlock<T> maxlanes(LaneBlock<T> a, LaneBlock<T> b) {
  return active_table<T>().maxlanes(a, b);
}
template <SatWord T>
LaneBlock<T> minlanes(LaneBlock<T> a, LaneBlock<T> b) {
  return active_table<T>().minlanes(a, b);
}
template <SatWord T>
LaneBlock<T> addsat(LaneBlock<T> a, LaneBlock<T> b) {
  return active_table<T>().addsat(a, b);
}
template <SatWord T>
LaneBlock<T> absdiff(LaneBlock<T> a, LaneBlock<T> b) {
  return active_table<T>().absdiff(a, b);
}

/// 32-bit saturating add by wrapping add plus overflow fix-up: lanes where
/// the wrapped sum is below an operand are forced to S. Equivalent to
/// addsat; kept as the alternative to the min(a, ~b) + b rewrite.
LaneBlock<std::uint32_t> addsat_overflow_fix(LaneBlock<std::uint32_t> a,
                                             LaneBlock<std::uint32_t> b);

}  // namespace kernels
}  // namespace srmat
