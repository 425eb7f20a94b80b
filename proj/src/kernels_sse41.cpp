// SSE4.1 implementation. Built with -msse4.1; only reached after the
// runtime check in kernels.cpp.

#include <smmintrin.h>

#include "kernels_impl.hpp"

namespace srmat::kernels::detail {
namespace {

template <SatWord T>
struct Ops;

template <>
struct Ops<std::uint8_t> {
  static __m128i splat(std::uint8_t v) { return _mm_set1_epi8(static_cast<char>(v)); }
  static __m128i subsat(__m128i a, __m128i b) { return _mm_subs_epu8(a, b); }
  static __m128i addsat(__m128i a, __m128i b) { return _mm_adds_epu8(a, b); }
  static __m128i max(__m128i a, __m128i b) { return _mm_max_epu8(a, b); }
  static __m128i min(__m128i a, __m128i b) { return _mm_min_epu8(a, b); }
};

template <>
struct Ops<std::uint16_t> {
  static __m128i splat(std::uint16_t v) { return _mm_set1_epi16(static_cast<short>(v)); }
  static __m128i subsat(__m128i a, __m128i b) { return _mm_subs_epu16(a, b); }
  static __m128i addsat(__m128i a, __m128i b) { return _mm_adds_epu16(a, b); }
  static __m128i max(__m128i a, __m128i b) { return _mm_max_epu16(a, b); }
  static __m128i min(__m128i a, __m128i b) { return _mm_min_epu16(a, b); }
};

template <>
struct Ops<std::uint32_t> {
  static __m128i splat(std::uint32_t v) { return _mm_set1_epi32(static_cast<int>(v)); }
  // No unsigned saturating subtract for dwords: (a max b) - b.
  static __m128i subsat(__m128i a, __m128i b) { return _mm_sub_epi32(_mm_max_epu32(a, b), b); }
  // No unsigned saturating add for dwords: (a min ~b) + b.
  static __m128i addsat(__m128i a, __m128i b) {
    const __m128i not_b = _mm_xor_si128(b, _mm_set1_epi32(-1));
    return _mm_add_epi32(_mm_min_epu32(a, not_b), b);
  }
  static __m128i max(__m128i a, __m128i b) { return _mm_max_epu32(a, b); }
  static __m128i min(__m128i a, __m128i b) { return _mm_min_epu32(a, b); }
};

template <SatWord T>
struct Sse41 {
  using Block = LaneBlock<T>;
  using O = Ops<T>;

  static __m128i load(const Block& b) { return _mm_load_si128(reinterpret_cast<const __m128i*>(b.lane.data())); }
  static __m128i load(const T* p) { return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p)); }
  static void store(T* p, __m128i v) { _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v); }
  static Block to_block(__m128i v) {
    Block r;
    _mm_store_si128(reinterpret_cast<__m128i*>(r.lane.data()), v);
    return r;
  }

  static Block clonenot(T e) { return to_block(O::splat(static_cast<T>(~e))); }
  static Block subsat(Block a, Block b) { return to_block(O::subsat(load(a), load(b))); }
  static Block maxlanes(Block a, Block b) { return to_block(O::max(load(a), load(b))); }
  static Block minlanes(Block a, Block b) { return to_block(O::min(load(a), load(b))); }
  static Block addsat(Block a, Block b) { return to_block(O::addsat(load(a), load(b))); }
  static Block absdiff(Block a, Block b) {
    const __m128i x = load(a);
    const __m128i y = load(b);
    return to_block(_mm_or_si128(O::subsat(x, y), O::subsat(y, x)));
  }

  static void update_max_mul(std::span<T> dst, std::span<const T> src, T e) {
    const __m128i b = O::splat(static_cast<T>(~e));
    T* d = dst.data();
    const T* s = src.data();
    for (std::size_t j = 0; j < dst.size(); j += Block::lanes) {
      store(d + j, O::max(load(d + j), O::subsat(load(s + j), b)));
    }
  }
  static void update_min_add(std::span<T> dst, std::span<const T> src, T dist) {
    const __m128i b = O::splat(dist);
    T* d = dst.data();
    const T* s = src.data();
    for (std::size_t j = 0; j < dst.size(); j += Block::lanes) {
      store(d + j, O::min(load(d + j), O::addsat(load(s + j), b)));
    }
  }
  template <class F>
  static void binary_rows(std::span<T> dst, std::span<const T> a, std::span<const T> b, F f) {
    for (std::size_t j = 0; j < dst.size(); j += Block::lanes) {
      store(dst.data() + j, f(load(a.data() + j), load(b.data() + j)));
    }
  }
  static void row_max(std::span<T> dst, std::span<const T> a, std::span<const T> b) {
    binary_rows(dst, a, b, O::max);
  }
  static void row_min(std::span<T> dst, std::span<const T> a, std::span<const T> b) {
    binary_rows(dst, a, b, O::min);
  }
  static void row_absdiff(std::span<T> dst, std::span<const T> a, std::span<const T> b) {
    binary_rows(dst, a, b, [](__m128i x, __m128i y) { return _mm_or_si128(O::subsat(x, y), O::subsat(y, x)); });
  }
  static void row_not(std::span<T> dst, std::span<const T> a) {
    const __m128i ones = _mm_set1_epi32(-1);
    for (std::size_t j = 0; j < dst.size(); j += Block::lanes) {
      store(dst.data() + j, _mm_xor_si128(load(a.data() + j), ones));
    }
  }

  static constexpr KernelTable<T> table{clonenot, subsat,  maxlanes, minlanes,       addsat,
                                        absdiff,  update_max_mul, update_min_add, row_max,
                                        row_min,  row_absdiff,    row_not};
};

}  // namespace

template <SatWord T>
const KernelTable<T>& sse41_table() {
  return Sse41<T>::table;
}

template const KernelTable<std::uint8_t>& sse41_table<std::uint8_t>();
template const KernelTable<std::uint16_t>& sse41_table<std::uint16_t>();
template const KernelTable<std::uint32_t>& sse41_table<std::uint32_t>();

// Wrapping add, then OR in an all-ones mask where the unsigned sum is below
// a. pcmpgtd compares signed, so both sides are biased by 2^31 first.
LaneBlock<std::uint32_t> addsat_overflow_fix_sse41(LaneBlock<std::uint32_t> a,
                                                   LaneBlock<std::uint32_t> b) {
  using K = Sse41<std::uint32_t>;
  const __m128i x = K::load(a);
  const __m128i sum = _mm_add_epi32(x, K::load(b));
  const __m128i bias = _mm_set1_epi32(static_cast<int>(0x80000000u));
  const __m128i overflow = _mm_cmpgt_epi32(_mm_xor_si128(x, bias), _mm_xor_si128(sum, bias));
  return K::to_block(_mm_or_si128(sum, overflow));
}

}  // namespace srmat::kernels::detail
