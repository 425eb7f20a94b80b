#include "srmat/boolmat.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace srmat {
namespace {

std::size_t blocks_for(std::size_t cols) { return (cols + BoolMat::block_bits - 1) / BoolMat::block_bits; }

void require_same_shape(const BoolMat& a, const BoolMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
}

template <class F>
BoolMat blockwise(const BoolMat& a, const BoolMat& b, F f) {
  std::vector<BoolMat::Block> out(a.blocks().size());
  auto x = a.blocks();
  auto y = b.blocks();
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = f(x[n], y[n]);
  return BoolMat::from_blocks(a.rows(), a.cols(), out);
}

}  // namespace

BoolMat::BoolMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cblocks_(blocks_for(cols)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("BoolMat: dimensions must be positive");
  blocks_.assign(rows_ * cblocks_, 0);
}

BoolMat BoolMat::identity(std::size_t dim) {
  BoolMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.row_ptr(i)[i / block_bits] |= Block{1} << (i % block_bits);
  return m;
}

BoolMat BoolMat::from_blocks(std::size_t rows, std::size_t cols, std::span<const Block> blocks) {
  BoolMat m(rows, cols);
  if (blocks.size() != m.blocks_.size()) {
    throw std::invalid_argument("BoolMat: expected " + std::to_string(m.blocks_.size()) + " blocks, got " +
                                std::to_string(blocks.size()));
  }
  const Block tail = m.tail_mask();
  for (std::size_t i = 0; i < rows; ++i) {
    if (blocks[i * m.cblocks_ + m.cblocks_ - 1] & ~tail) {
      throw std::invalid_argument("BoolMat: padding bits set in row " + std::to_string(i));
    }
  }
  m.blocks_.assign(blocks.begin(), blocks.end());
  return m;
}

BoolMat::Block BoolMat::tail_mask() const {
  const std::size_t used = cols_ % block_bits;
  return used == 0 ? ~Block{0} : (Block{1} << used) - 1;
}

bool BoolMat::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("BoolMat::get: index out of range");
  return bit(i, j);
}

void BoolMat::set(std::size_t i, std::size_t j, bool v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("BoolMat::set: index out of range");
  const Block mask = Block{1} << (j % block_bits);
  Block& blk = row_ptr(i)[j / block_bits];
  blk = v ? (blk | mask) : (blk & ~mask);
}

std::span<const BoolMat::Block> BoolMat::row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("BoolMat::row: index out of range");
  return {row_ptr(i), cblocks_};
}

std::size_t BoolMat::count() const {
  std::size_t n = 0;
  for (Block b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

BoolMat entrywise_or(const BoolMat& a, const BoolMat& b) {
  require_same_shape(a, b, "or");
  return blockwise(a, b, [](auto x, auto y) { return x | y; });
}

BoolMat entrywise_and(const BoolMat& a, const BoolMat& b) {
  require_same_shape(a, b, "and");
  return blockwise(a, b, [](auto x, auto y) { return x & y; });
}

BoolMat entrywise_xor(const BoolMat& a, const BoolMat& b) {
  require_same_shape(a, b, "xor");
  return blockwise(a, b, [](auto x, auto y) { return x ^ y; });
}

BoolMat entrywise_not(const BoolMat& a) {
  std::vector<BoolMat::Block> out(a.blocks().begin(), a.blocks().end());
  const std::size_t cb = a.blocks_per_row();
  const BoolMat::Block tail = a.tail_mask();
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = ~out[n];
    if (n % cb == cb - 1) out[n] &= tail;
  }
  return BoolMat::from_blocks(a.rows(), a.cols(), out);
}

BoolMat mul(const BoolMat& a, const BoolMat& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + ")");
  }
  BoolMat p(a.rows(), b.cols());
  const std::size_t cb = b.cblocks_;
  for (std::size_t k = a.cols(); k-- > 0;) {
    const BoolMat::Block* b_k = b.row_ptr(k);
    for (std::size_t i = a.rows(); i-- > 0;) {
      if (!a.bit(i, k)) continue;
      BoolMat::Block* p_i = p.row_ptr(i);
      for (std::size_t blk = 0; blk < cb; ++blk) p_i[blk] |= b_k[blk];
    }
  }
  return p;
}

void transitive_close(BoolMat& t) {
  if (!t.square()) throw std::invalid_argument("transitive_close: matrix is not square");
  const std::size_t cb = t.cblocks_;
  for (std::size_t k = t.rows(); k-- > 0;) {
    const BoolMat::Block* t_k = t.row_ptr(k);
    for (std::size_t i = t.rows(); i-- > 0;) {
      if (i == k || !t.bit(i, k)) continue;
      BoolMat::Block* t_i = t.row_ptr(i);
      for (std::size_t blk = 0; blk < cb; ++blk) t_i[blk] |= t_k[blk];
    }
  }
}

BoolMat transitive_closure(const BoolMat& a) {
  BoolMat t = a;
  transitive_close(t);
  return t;
}

BoolMat reflexive_transitive_closure(const BoolMat& a) {
  return entrywise_or(BoolMat::identity(a.rows()), transitive_closure(a));
}

}  // namespace srmat
