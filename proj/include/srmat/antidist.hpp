#pragma once

// Dense matrices over the saturated semirings.
//
// AntidistMat<T> stores anti-distances (entry a means distance S - a, 0 means
// no path) and multiplies with (max, saturated product). DistMat<T> is the
// De Morgan dual: it stores distances directly (S means no path) and
// multiplies min-plus with saturating addition. entrywise_not converts
// between the two.
//
// Rows are padded to a whole number of 128-bit lane blocks. Padding entries
// hold the additive identity of the encoding (0 resp. S), so the row kernels
// can run over full blocks without masking.

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "srmat/boolmat.hpp"
#include "srmat/graph.hpp"
#include "srmat/kernels.hpp"
#include "srmat/semiring.hpp"

namespace srmat {

enum class Encoding : std::uint8_t { antidistance, distance };

constexpr Encoding dual(Encoding e) {
  return e == Encoding::antidistance ? Encoding::distance : Encoding::antidistance;
}

namespace detail {
struct SatOps;
}

template <SatWord T, Encoding E>
class SatMatrix {
 public:
  using word_type = T;
  using value_type = std::conditional_t<E == Encoding::antidistance, SatVal<T>, DistVal<T>>;

  static constexpr Encoding encoding = E;
  static constexpr T S = saturation_v<T>;
  static constexpr std::size_t lanes = lanes_v<T>;
  static constexpr T additive_identity = E == Encoding::antidistance ? T{0} : S;
  static constexpr T multiplicative_identity = E == Encoding::antidistance ? S : T{0};

  /// R x C matrix with every entry "no path". Throws std::invalid_argument
  /// for an empty shape.
  SatMatrix(std::size_t rows, std::size_t cols);

  static SatMatrix zero(std::size_t rows, std::size_t cols) { return SatMatrix(rows, cols); }
  /// Distance 0 on the diagonal, no path elsewhere.
  static SatMatrix identity(std::size_t dim);
  /// Row-major values without padding.
  static SatMatrix from_values(std::size_t rows, std::size_t cols, std::span<const T> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }
  bool square() const { return rows_ == cols_; }

  // Range-checked; throw std::out_of_range.
  T raw(std::size_t i, std::size_t j) const;
  void set_raw(std::size_t i, std::size_t j, T v);
  value_type at(std::size_t i, std::size_t j) const { return value_type{raw(i, j)}; }
  void set(std::size_t i, std::size_t j, value_type v) { set_raw(i, j, v.raw()); }

  /// Row i including its padding entries.
  std::span<const T> padded_row(std::size_t i) const;
  /// Row-major values without padding.
  std::vector<T> values() const;

  friend bool operator==(const SatMatrix&, const SatMatrix&) = default;

 private:
  friend struct detail::SatOps;

  T* row_ptr(std::size_t i) { return data_.data() + i * stride_; }
  const T* row_ptr(std::size_t i) const { return data_.data() + i * stride_; }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<T> data_;
};

template <SatWord T>
using AntidistMat = SatMatrix<T, Encoding::antidistance>;
template <SatWord T>
using DistMat = SatMatrix<T, Encoding::distance>;

/// D x D anti-distance adjacency matrix: entry (u,v) = S - w, keeping the
/// shortest of parallel edges. Rejects vertices >= D and weights > S with
/// std::out_of_range.
template <SatWord T>
AntidistMat<T> from_edges(std::size_t dim, std::span<const Edge> edges);

// Entrywise operations: and = min, or = max, xor = |a - b|, not = S - a.
// Binary ones throw std::invalid_argument on shape mismatch.
template <SatWord T, Encoding E>
SatMatrix<T, E> entrywise_and(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b);
template <SatWord T, Encoding E>
SatMatrix<T, E> entrywise_or(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b);
template <SatWord T, Encoding E>
SatMatrix<T, E> entrywise_xor(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b);
template <SatWord T, Encoding E>
SatMatrix<T, dual(E)> entrywise_not(const SatMatrix<T, E>& a);

/// (A * B)(i,j) = max_k sat_mul(A(i,k), B(k,j)).
template <SatWord T>
AntidistMat<T> mul(const AntidistMat<T>& a, const AntidistMat<T>& b);

/// Min-plus product with saturating addition.
template <SatWord T>
DistMat<T> funny_mul_mat(const DistMat<T>& a, const DistMat<T>& b);

/// Floyd-Warshall over anti-distances, in place. Entry (i,j) becomes S minus
/// the shortest distance over paths with at least one edge (0 if none below
/// S); the diagonal holds the shortest cycle through each vertex.
template <SatWord T>
void transclose(AntidistMat<T>& t);
template <SatWord T>
AntidistMat<T> transclosure(const AntidistMat<T>& a);

/// Min-plus Floyd-Warshall on distances, in place. The diagonal holds the
/// shortest cycle through each vertex (S if none).
template <SatWord T>
void dransclose(DistMat<T>& t);
template <SatWord T>
DistMat<T> dransclosure(const DistMat<T>& a);

/// Nonzero entries become 1.
template <SatWord T>
BoolMat to_boolmat(const AntidistMat<T>& a);
/// 1 becomes S (distance 0), 0 stays 0.
template <SatWord T>
AntidistMat<T> from_boolmat(const BoolMat& b);

template <SatWord T, Encoding E>
SatMatrix<T, E> operator&(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b) {
  return entrywise_and(a, b);
}
template <SatWord T, Encoding E>
SatMatrix<T, E> operator|(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b) {
  return entrywise_or(a, b);
}
template <SatWord T, Encoding E>
SatMatrix<T, E> operator^(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b) {
  return entrywise_xor(a, b);
}
template <SatWord T, Encoding E>
SatMatrix<T, dual(E)> operator~(const SatMatrix<T, E>& a) {
  return entrywise_not(a);
}
template <SatWord T>
AntidistMat<T> operator*(const AntidistMat<T>& a, const AntidistMat<T>& b) {
  return mul(a, b);
}
// Distance matrices multiply with +, the dual of *.
template <SatWord T>
DistMat<T> operator+(const DistMat<T>& a, const DistMat<T>& b) {
  return funny_mul_mat(a, b);
}

}  // namespace srmat
