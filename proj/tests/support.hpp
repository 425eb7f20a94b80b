#pragma once

// Conversions between library matrices and the oracle's dense arrays, plus
// seeded random generators shared by the test binaries.

#include <cstdint>
#include <random>

#include "oracle/oracle.hpp"
#include "srmat/antidist.hpp"
#include "srmat/boolmat.hpp"
#include "srmat/graph.hpp"

namespace testing_support {

using Rng = std::mt19937_64;

inline oracle::DenseBool dense(const srmat::BoolMat& m) {
  oracle::DenseBool d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d.at(i, j) = m.get(i, j);
  return d;
}

template <srmat::SatWord T, srmat::Encoding E>
oracle::DenseSat dense(const srmat::SatMatrix<T, E>& m) {
  oracle::DenseSat d(m.rows(), m.cols(), srmat::saturation_v<T>);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d.at(i, j) = m.raw(i, j);
  return d;
}

inline srmat::BoolMat to_lib(const oracle::DenseBool& d) {
  srmat::BoolMat m(d.rows, d.cols);
  for (std::size_t i = 0; i < d.rows; ++i)
    for (std::size_t j = 0; j < d.cols; ++j) m.set(i, j, d.at(i, j) != 0);
  return m;
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline srmat::BoolMat random_bool(Rng& rng, std::size_t rows, std::size_t cols, double density) {
  srmat::BoolMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coin(rng, density)) m.set(i, j, true);
  return m;
}

/// Raw entries: a quarter each of 0, S, boundary-adjacent values and uniform.
template <srmat::SatWord T, srmat::Encoding E = srmat::Encoding::antidistance>
srmat::SatMatrix<T, E> random_sat(Rng& rng, std::size_t rows, std::size_t cols) {
  constexpr T S = srmat::saturation_v<T>;
  srmat::SatMatrix<T, E> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      T v;
      switch (uniform(rng, 0, 3)) {
        case 0:
          v = 0;
          break;
        case 1:
          v = S;
          break;
        case 2:
          v = static_cast<T>(S - uniform(rng, 0, 20));
          break;
        default:
          v = static_cast<T>(rng());
      }
      m.set_raw(i, j, v);
    }
  return m;
}

inline srmat::GraphSpec random_graph(Rng& rng, std::size_t d, double p, std::uint64_t wmin, std::uint64_t wmax) {
  srmat::GraphSpec g;
  g.vertex_count = d;
  g.weighted = true;
  std::uniform_int_distribution<std::uint64_t> w(wmin, wmax);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v)
      if (coin(rng, p)) g.edges.push_back({u, v, w(rng)});
  return g;
}

}  // namespace testing_support
