#pragma once

// Bit-packed Boolean matrices.
//
// Each row is stored as ceil(C / 64) 64-bit blocks, column j in bit j % 64
// of block j / 64 (least significant bit first). Bits for columns >= C are
// always zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "srmat/semiring.hpp"

namespace srmat {

class BoolMat {
 public:
  using Block = std::uint64_t;
  static constexpr std::size_t block_bits = 64;

  /// R x C zero matrix. Throws std::invalid_argument for an empty shape.
  BoolMat(std::size_t rows, std::size_t cols);

  static BoolMat zero(std::size_t rows, std::size_t cols) { return BoolMat(rows, cols); }
  static BoolMat identity(std::size_t dim);

  /// Builds a matrix from row-major blocks. Rejects a wrong block count and
  /// set padding bits.
  static BoolMat from_blocks(std::size_t rows, std::size_t cols, std::span<const Block> blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t blocks_per_row() const { return cblocks_; }
  bool square() const { return rows_ == cols_; }

  /// Range-checked access; throws std::out_of_range.
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool v);
  BoolVal at(std::size_t i, std::size_t j) const { return BoolVal{get(i, j)}; }

  /// All blocks, row-major.
  std::span<const Block> blocks() const { return blocks_; }
  std::span<const Block> row(std::size_t i) const;

  /// Mask of the valid bits in the last block of a row.
  Block tail_mask() const;

  std::size_t count() const;

  friend bool operator==(const BoolMat&, const BoolMat&) = default;

 private:
  friend BoolMat mul(const BoolMat&, const BoolMat&);
  friend void transitive_close(BoolMat&);

  Block* row_ptr(std::size_t i) { return blocks_.data() + i * cblocks_; }
  const Block* row_ptr(std::size_t i) const { return blocks_.data() + i * cblocks_; }
  bool bit(std::size_t i, std::size_t j) const {
    return (row_ptr(i)[j / block_bits] >> (j % block_bits)) & 1u;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t cblocks_;
  std::vector<Block> blocks_;
};

// Entrywise operations. Dimension mismatch throws std::invalid_argument.
BoolMat entrywise_or(const BoolMat& a, const BoolMat& b);
BoolMat entrywise_and(const BoolMat& a, const BoolMat& b);
BoolMat entrywise_xor(const BoolMat& a, const BoolMat& b);
BoolMat entrywise_not(const BoolMat& a);

/// Boolean product of an R x C and a C x C' matrix, accumulated as one outer
/// product per inner index k: every row i with A(i,k) set ORs row k of B.
BoolMat mul(const BoolMat& a, const BoolMat& b);

/// Warshall's algorithm in place. Throws std::invalid_argument if not square.
void transitive_close(BoolMat& t);

/// Paths of length >= 1: A | A*A | A*A*A | ...
BoolMat transitive_closure(const BoolMat& a);

/// Paths of length >= 0: I | transitive_closure(A).
BoolMat reflexive_transitive_closure(const BoolMat& a);

inline BoolMat operator|(const BoolMat& a, const BoolMat& b) { return entrywise_or(a, b); }
inline BoolMat operator&(const BoolMat& a, const BoolMat& b) { return entrywise_and(a, b); }
inline BoolMat operator^(const BoolMat& a, const BoolMat& b) { return entrywise_xor(a, b); }
inline BoolMat operator~(const BoolMat& a) { return entrywise_not(a); }
inline BoolMat operator*(const BoolMat& a, const BoolMat& b) { return mul(a, b); }

}  // namespace srmat
