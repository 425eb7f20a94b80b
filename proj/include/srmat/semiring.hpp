#pragma once

// Scalar arithmetic for the two path semirings.
//
//   Boolean:        (bool, or, and)
//   anti-distance:  ({0..S}, max, saturated product)
//
// An anti-distance value a encodes the distance S - a: S is distance 0 and
// 0 is "unreachable". The distance dual stores S - a directly, so that its
// addition is min and its multiplication is saturating +.

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <type_traits>

namespace srmat {

/// Lane types supported by the saturated matrices: 8, 16 and 32 bit unsigned.
template <class T>
concept SatWord = std::same_as<T, std::uint8_t> || std::same_as<T, std::uint16_t> ||
                  std::same_as<T, std::uint32_t>;

/// Saturation distance S = 2^W - 1 for the word type.
template <SatWord T>
inline constexpr T saturation_v = std::numeric_limits<T>::max();

template <SatWord T>
inline constexpr unsigned width_v = sizeof(T) * 8;

/// Boolean semiring element.
struct BoolVal {
  bool value = false;

  constexpr BoolVal() = default;
  constexpr explicit BoolVal(bool v) : value(v) {}
  constexpr explicit operator bool() const { return value; }
  friend constexpr bool operator==(BoolVal, BoolVal) = default;
};

constexpr BoolVal bool_add(BoolVal a, BoolVal b) { return BoolVal{a.value || b.value}; }
constexpr BoolVal bool_mul(BoolVal a, BoolVal b) { return BoolVal{a.value && b.value}; }

template <SatWord T>
class DistVal;

/// Anti-distance value: raw in [0, S], encodes distance S - raw.
template <SatWord T>
class SatVal {
 public:
  using word_type = T;
  static constexpr T S = saturation_v<T>;

  constexpr SatVal() = default;
  constexpr explicit SatVal(T raw) : raw_(raw) {}

  /// The additive identity (unreachable).
  static constexpr SatVal zero() { return SatVal{0}; }
  /// The multiplicative identity (distance 0).
  static constexpr SatVal one() { return SatVal{S}; }

  constexpr T raw() const { return raw_; }
  friend constexpr auto operator<=>(SatVal, SatVal) = default;

 private:
  T raw_ = 0;
};

/// Distance value: raw in [0, S] is the distance itself, S means unreachable.
template <SatWord T>
class DistVal {
 public:
  using word_type = T;
  static constexpr T S = saturation_v<T>;

  constexpr DistVal() = default;
  constexpr explicit DistVal(T raw) : raw_(raw) {}

  /// The additive identity of min (unreachable).
  static constexpr DistVal zero() { return DistVal{S}; }
  /// The identity of saturating + (distance 0).
  static constexpr DistVal one() { return DistVal{0}; }

  constexpr T raw() const { return raw_; }
  friend constexpr auto operator<=>(DistVal, DistVal) = default;

 private:
  T raw_ = S;
};

/// Saturating difference max(a - b, 0).
template <SatWord T>
constexpr T sub_saturate(T a, T b) {
  return a > b ? static_cast<T>(a - b) : T{0};
}

/// Saturating sum min(a + b, S). Written as a + min(b, S - a) so it never
/// wraps at width.
template <SatWord T>
constexpr T add_saturate(T a, T b) {
  const T room = static_cast<T>(~a);
  return static_cast<T>(a + (b < room ? b : room));
}

template <SatWord T>
constexpr SatVal<T> sat_add(SatVal<T> a, SatVal<T> b) {
  return a.raw() < b.raw() ? b : a;
}

/// a * b = max(a + b - S, 0), evaluated as b - (S - a) with saturation.
template <SatWord T>
constexpr SatVal<T> sat_mul(SatVal<T> a, SatVal<T> b) {
  return SatVal<T>{sub_saturate<T>(b.raw(), static_cast<T>(~a.raw()))};
}

/// S - a. Identical to the bitwise complement at width W.
template <SatWord T>
constexpr DistVal<T> sat_neg(SatVal<T> a) {
  return DistVal<T>{static_cast<T>(~a.raw())};
}

template <SatWord T>
constexpr SatVal<T> sat_neg(DistVal<T> a) {
  return SatVal<T>{static_cast<T>(~a.raw())};
}

template <SatWord T>
constexpr DistVal<T> funny_add(DistVal<T> a, DistVal<T> b) {
  return a.raw() < b.raw() ? a : b;
}

/// Min-plus product: min(a + b, S).
template <SatWord T>
constexpr DistVal<T> funny_mul(DistVal<T> a, DistVal<T> b) {
  return DistVal<T>{add_saturate<T>(a.raw(), b.raw())};
}

/// Distance encoded by an anti-distance value, S - a.
template <SatWord T>
constexpr T delta(SatVal<T> a) {
  return static_cast<T>(saturation_v<T> - a.raw());
}

/// Anti-distance value for a distance d <= S.
template <SatWord T>
constexpr SatVal<T> from_distance(T d) {
  return SatVal<T>{static_cast<T>(~d)};
}

}  // namespace srmat
