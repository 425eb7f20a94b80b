#include "srmat/antidist.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace srmat {
namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

template <class M>
void require_same_shape(const M& a, const M& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch " + shape(a.rows(), a.cols()) + " vs " +
                                shape(b.rows(), b.cols()));
  }
}

template <class M>
void require_inner(const M& a, const M& b, const char* op) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument(std::string(op) + ": inner dimensions differ (" + shape(a.rows(), a.cols()) +
                                " * " + shape(b.rows(), b.cols()) + ")");
  }
}

}  // namespace

namespace detail {

struct SatOps {
  template <SatWord T, Encoding E>
  static std::span<T> row(SatMatrix<T, E>& m, std::size_t i) {
    return {m.row_ptr(i), m.stride_};
  }
  template <SatWord T, Encoding E>
  static std::span<const T> row(const SatMatrix<T, E>& m, std::size_t i) {
    return {m.row_ptr(i), m.stride_};
  }
  template <SatWord T, Encoding E>
  static T entry(const SatMatrix<T, E>& m, std::size_t i, std::size_t j) {
    return m.row_ptr(i)[j];
  }
  template <SatWord T, Encoding E>
  static void put(SatMatrix<T, E>& m, std::size_t i, std::size_t j, T v) {
    m.row_ptr(i)[j] = v;
  }
  template <SatWord T, Encoding E>
  static void reset_padding(SatMatrix<T, E>& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) {
      std::fill(m.row_ptr(i) + m.cols_, m.row_ptr(i) + m.stride_, SatMatrix<T, E>::additive_identity);
    }
  }

  template <SatWord T, Encoding E, class RowOp>
  static SatMatrix<T, E> binary(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b, RowOp op) {
    SatMatrix<T, E> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) op(row(out, i), row(a, i), row(b, i));
    return out;
  }

  // Outer-product accumulation: for every k, every row i with a usable
  // entry A(i,k) folds row k of B into row i of the product. Rows with an
  // additive-identity entry are skipped; that entry annihilates the product
  // and the identity is neutral for the accumulation.
  template <SatWord T, Encoding E, class Update>
  static SatMatrix<T, E> product(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b, Update update) {
    SatMatrix<T, E> p(a.rows(), b.cols());
    for (std::size_t k = a.cols(); k-- > 0;) {
      const auto b_k = row(b, k);
      for (std::size_t i = a.rows(); i-- > 0;) {
        const T e = entry(a, i, k);
        if (e != SatMatrix<T, E>::additive_identity) update(row(p, i), b_k, e);
      }
    }
    return p;
  }

  // Same loop with A = B = P = T. Row k is read while row i is written; for
  // i == k the update cannot raise any entry since T(k,k) is at most the
  // multiplicative identity, so aliasing is harmless.
  template <SatWord T, Encoding E, class Update>
  static void close(SatMatrix<T, E>& t, Update update) {
    for (std::size_t k = t.rows(); k-- > 0;) {
      const auto t_k = std::as_const(t).padded_row(k);
      for (std::size_t i = t.rows(); i-- > 0;) {
        const T e = entry(t, i, k);
        if (e != SatMatrix<T, E>::additive_identity) update(row(t, i), t_k, e);
      }
    }
  }
};

}  // namespace detail

template <SatWord T, Encoding E>
SatMatrix<T, E>::SatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + lanes - 1) / lanes * lanes) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("SatMatrix: dimensions must be positive");
  data_.assign(rows_ * stride_, additive_identity);
}

template <SatWord T, Encoding E>
SatMatrix<T, E> SatMatrix<T, E>::identity(std::size_t dim) {
  SatMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m.row_ptr(i)[i] = multiplicative_identity;
  return m;
}

template <SatWord T, Encoding E>
SatMatrix<T, E> SatMatrix<T, E>::from_values(std::size_t rows, std::size_t cols, std::span<const T> values) {
  SatMatrix m(rows, cols);
  if (values.size() != rows * cols) {
    throw std::invalid_argument("SatMatrix: expected " + std::to_string(rows * cols) + " values, got " +
                                std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < rows; ++i) std::copy_n(values.data() + i * cols, cols, m.row_ptr(i));
  return m;
}

template <SatWord T, Encoding E>
T SatMatrix<T, E>::raw(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("SatMatrix: index out of range");
  return row_ptr(i)[j];
}

template <SatWord T, Encoding E>
void SatMatrix<T, E>::set_raw(std::size_t i, std::size_t j, T v) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("SatMatrix: index out of range");
  row_ptr(i)[j] = v;
}

template <SatWord T, Encoding E>
std::span<const T> SatMatrix<T, E>::padded_row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("SatMatrix: row out of range");
  return {row_ptr(i), stride_};
}

template <SatWord T, Encoding E>
std::vector<T> SatMatrix<T, E>::values() const {
  std::vector<T> out;
  out.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) out.insert(out.end(), row_ptr(i), row_ptr(i) + cols_);
  return out;
}

template <SatWord T>
AntidistMat<T> from_edges(std::size_t dim, std::span<const Edge> edges) {
  AntidistMat<T> m(dim, dim);
  for (const Edge& e : edges) {
    if (e.source >= dim || e.target >= dim) {
      throw std::out_of_range("from_edges: vertex " + std::to_string(std::max(e.source, e.target)) +
                              " out of range [0, " + std::to_string(dim) + ")");
    }
    if (e.weight > saturation_v<T>) {
      throw std::out_of_range("from_edges: weight " + std::to_string(e.weight) + " exceeds saturation distance " +
                              std::to_string(saturation_v<T>));
    }
    const T v = static_cast<T>(saturation_v<T> - e.weight);
    if (v > detail::SatOps::entry(m, e.source, e.target)) detail::SatOps::put(m, e.source, e.target, v);
  }
  return m;
}

template <SatWord T, Encoding E>
SatMatrix<T, E> entrywise_and(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b) {
  require_same_shape(a, b, "and");
  return detail::SatOps::binary(a, b, kernels::active_table<T>().row_min);
}

template <SatWord T, Encoding E>
SatMatrix<T, E> entrywise_or(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b) {
  require_same_shape(a, b, "or");
  return detail::SatOps::binary(a, b, kernels::active_table<T>().row_max);
}

template <SatWord T, Encoding E>
SatMatrix<T, E> entrywise_xor(const SatMatrix<T, E>& a, const SatMatrix<T, E>& b) {
  require_same_shape(a, b, "xor");
  auto out = detail::SatOps::binary(a, b, kernels::active_table<T>().row_absdiff);
  // |S - S| = 0 is not the distance identity.
  if constexpr (E == Encoding::distance) detail::SatOps::reset_padding(out);
  return out;
}

template <SatWord T, Encoding E>
SatMatrix<T, dual(E)> entrywise_not(const SatMatrix<T, E>& a) {
  SatMatrix<T, dual(E)> out(a.rows(), a.cols());
  const auto& k = kernels::active_table<T>();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    k.row_not(detail::SatOps::row(out, i), detail::SatOps::row(a, i));
  }
  return out;
}

template <SatWord T>
AntidistMat<T> mul(const AntidistMat<T>& a, const AntidistMat<T>& b) {
  require_inner(a, b, "mul");
  return detail::SatOps::product(a, b, kernels::active_table<T>().update_max_mul);
}

template <SatWord T>
DistMat<T> funny_mul_mat(const DistMat<T>& a, const DistMat<T>& b) {
  require_inner(a, b, "funny_mul_mat");
  return detail::SatOps::product(a, b, kernels::active_table<T>().update_min_add);
}

template <SatWord T>
void transclose(AntidistMat<T>& t) {
  if (!t.square()) throw std::invalid_argument("transclose: matrix is not square");
  detail::SatOps::close(t, kernels::active_table<T>().update_max_mul);
}

template <SatWord T>
AntidistMat<T> transclosure(const AntidistMat<T>& a) {
  AntidistMat<T> t = a;
  transclose(t);
  return t;
}

template <SatWord T>
void dransclose(DistMat<T>& t) {
  if (!t.square()) throw std::invalid_argument("dransclose: matrix is not square");
  detail::SatOps::close(t, kernels::active_table<T>().update_min_add);
}

template <SatWord T>
DistMat<T> dransclosure(const DistMat<T>& a) {
  DistMat<T> t = a;
  dransclose(t);
  return t;
}

template <SatWord T>
BoolMat to_boolmat(const AntidistMat<T>& a) {
  BoolMat b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (detail::SatOps::entry(a, i, j) != 0) b.set(i, j, true);
    }
  }
  return b;
}

template <SatWord T>
AntidistMat<T> from_boolmat(const BoolMat& b) {
  AntidistMat<T> a(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b.get(i, j)) detail::SatOps::put(a, i, j, saturation_v<T>);
    }
  }
  return a;
}

#define SRMAT_INSTANTIATE_ENC(T, E)                                                               \
  template class SatMatrix<T, E>;                                                                 \
  template SatMatrix<T, E> entrywise_and(const SatMatrix<T, E>&, const SatMatrix<T, E>&);         \
  template SatMatrix<T, E> entrywise_or(const SatMatrix<T, E>&, const SatMatrix<T, E>&);          \
  template SatMatrix<T, E> entrywise_xor(const SatMatrix<T, E>&, const SatMatrix<T, E>&);         \
  template SatMatrix<T, dual(E)> entrywise_not(const SatMatrix<T, E>&);

#define SRMAT_INSTANTIATE(T)                                              \
  SRMAT_INSTANTIATE_ENC(T, Encoding::antidistance)                        \
  SRMAT_INSTANTIATE_ENC(T, Encoding::distance)                            \
  template AntidistMat<T> from_edges<T>(std::size_t, std::span<const Edge>); \
  template AntidistMat<T> mul(const AntidistMat<T>&, const AntidistMat<T>&); \
  template DistMat<T> funny_mul_mat(const DistMat<T>&, const DistMat<T>&);   \
  template void transclose(AntidistMat<T>&);                              \
  template AntidistMat<T> transclosure(const AntidistMat<T>&);            \
  template void dransclose(DistMat<T>&);                                  \
  template DistMat<T> dransclosure(const DistMat<T>&);                    \
  template BoolMat to_boolmat(const AntidistMat<T>&);                     \
  template AntidistMat<T> from_boolmat<T>(const BoolMat&);

SRMAT_INSTANTIATE(std::uint8_t)
SRMAT_INSTANTIATE(std::uint16_t)
SRMAT_INSTANTIATE(std::uint32_t)

#undef SRMAT_INSTANTIATE
#undef SRMAT_INSTANTIATE_ENC

}  // namespace srmat
