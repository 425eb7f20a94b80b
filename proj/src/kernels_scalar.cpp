// Lane-by-lane reference implementation. This file is built with
// auto-vectorization disabled so that the fallback really is scalar.

#include <algorithm>

#include "kernels_impl.hpp"

namespace srmat::kernels::detail {
namespace {

template <SatWord T>
struct Scalar {
  using Block = LaneBlock<T>;
  static constexpr T S = saturation_v<T>;

  static T sub(T a, T b) { return a > b ? static_cast<T>(a - b) : T{0}; }
  static T add(T a, T b) { return a > static_cast<T>(S - b) ? S : static_cast<T>(a + b); }

  template <class F>
  static Block lanewise(Block a, Block b, F f) {
    Block r;
    for (std::size_t i = 0; i < Block::lanes; ++i) r.lane[i] = f(a.lane[i], b.lane[i]);
    return r;
  }

  static Block clonenot(T e) {
    Block r;
    r.lane.fill(static_cast<T>(~e));
    return r;
  }
  static Block subsat(Block a, Block b) { return lanewise(a, b, sub); }
  static Block maxlanes(Block a, Block b) {
    return lanewise(a, b, [](T x, T y) { return std::max(x, y); });
  }
  static Block minlanes(Block a, Block b) {
    return lanewise(a, b, [](T x, T y) { return std::min(x, y); });
  }
  static Block addsat(Block a, Block b) { return lanewise(a, b, add); }
  static Block absdiff(Block a, Block b) {
    return lanewise(a, b, [](T x, T y) { return x > y ? static_cast<T>(x - y) : static_cast<T>(y - x); });
  }

  static void update_max_mul(std::span<T> dst, std::span<const T> src, T e) {
    const T ne = static_cast<T>(~e);
    for (std::size_t j = 0; j < dst.size(); ++j) {
      T v = src[j];
      if (v > ne) {
        v -= ne;
        if (dst[j] < v) dst[j] = v;
      }
    }
  }
  static void update_min_add(std::span<T> dst, std::span<const T> src, T d) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      const T v = add(src[j], d);
      if (v < dst[j]) dst[j] = v;
    }
  }
  static void row_max(std::span<T> dst, std::span<const T> a, std::span<const T> b) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = std::max(a[j], b[j]);
  }
  static void row_min(std::span<T> dst, std::span<const T> a, std::span<const T> b) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = std::min(a[j], b[j]);
  }
  static void row_absdiff(std::span<T> dst, std::span<const T> a, std::span<const T> b) {
    for (std::size_t j = 0; j < dst.size(); ++j)
      dst[j] = a[j] > b[j] ? static_cast<T>(a[j] - b[j]) : static_cast<T>(b[j] - a[j]);
  }
  static void row_not(std::span<T> dst, std::span<const T> a) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] = static_cast<T>(~a[j]);
  }

  static constexpr KernelTable<T> table{clonenot, subsat,  maxlanes, minlanes,       addsat,
                                        absdiff,  update_max_mul, update_min_add, row_max,
                                        row_min,  row_absdiff,    row_not};
};

}  // namespace

template <SatWord T>
const KernelTable<T>& scalar_table() {
  return Scalar<T>::table;
}

template const KernelTable<std::uint8_t>& scalar_table<std::uint8_t>();
template const KernelTable<std::uint16_t>& scalar_table<std::uint16_t>();
template const KernelTable<std::uint32_t>& scalar_table<std::uint32_t>();

LaneBlock<std::uint32_t> addsat_overflow_fix_scalar(LaneBlock<std::uint32_t> a,
                                                    LaneBlock<std::uint32_t> b) {
  LaneBlock<std::uint32_t> r;
  for (std::size_t i = 0; i < r.lanes; ++i) {
    const std::uint32_t sum = a.lane[i] + b.lane[i];
    r.lane[i] = sum < a.lane[i] ? 0xffffffffu : sum;
  }
  return r;
}

}  // namespace srmat::kernels::detail
