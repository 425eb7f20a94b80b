#include <vector>

#include "doctest.h"
#include "srmat/antidist.hpp"
#include "support.hpp"

using namespace srmat;
using namespace testing_support;

namespace {

template <SatWord T, Encoding E>
bool padding_ok(const SatMatrix<T, E>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.padded_row(i);
    for (std::size_t j = m.cols(); j < row.size(); ++j)
      if (row[j] != SatMatrix<T, E>::additive_identity) return false;
  }
  return true;
}

template <SatWord T>
AntidistMat<T> squaring_closure(const AntidistMat<T>& a) {
  AntidistMat<T> power = entrywise_or(AntidistMat<T>::identity(a.rows()), a);
  for (std::size_t e = 1; e + 1 < a.rows(); e *= 2) power = mul(power, power);
  return mul(a, power);
}

std::vector<Edge> path_edges() { return {{0, 1, 3}, {1, 2, 4}}; }

}  // namespace

#define WIDTHS std::uint8_t, std::uint16_t, std::uint32_t

TEST_CASE_TEMPLATE("zero and identity", T, WIDTHS) {
  constexpr T S = saturation_v<T>;
  const auto id = AntidistMat<T>::identity(2);
  CHECK(id.raw(0, 0) == S);
  CHECK(id.raw(0, 1) == 0);
  CHECK(id.raw(1, 1) == S);
  CHECK(DistMat<T>::identity(2).raw(0, 1) == S);
  CHECK(DistMat<T>::identity(2).raw(0, 0) == 0);
  CHECK(AntidistMat<T>(3, 20).stride() % lanes_v<T> == 0);
  CHECK_THROWS_AS(AntidistMat<T>(0, 1), std::invalid_argument);

  Rng rng(1);
  const auto a = random_sat<T>(rng, 5, 5);
  CHECK(mul(AntidistMat<T>::identity(5), a) == a);
  CHECK(mul(a, AntidistMat<T>::identity(5)) == a);
  CHECK(entrywise_or(AntidistMat<T>::zero(5, 5), a) == a);
  CHECK(padding_ok(DistMat<T>::zero(3, 3)));
}

TEST_CASE("from_edges") {
  std::vector<Edge> edges{{0, 1, 3}};
  auto m = from_edges<std::uint8_t>(2, edges);
  CHECK(m.raw(0, 1) == 252);
  CHECK(m.raw(1, 0) == 0);
  CHECK(m.raw(0, 0) == 0);
  edges.push_back({0, 1, 5});
  CHECK(from_edges<std::uint8_t>(2, edges).raw(0, 1) == 252);
  std::vector<Edge> loop{{0, 0, 0}};
  CHECK(from_edges<std::uint8_t>(1, loop).raw(0, 0) == 255);
  std::vector<Edge> bad_vertex{{0, 2, 1}};
  CHECK_THROWS_AS(from_edges<std::uint8_t>(2, bad_vertex), std::out_of_range);
  std::vector<Edge> heavy{{0, 1, 256}};
  CHECK_THROWS_AS(from_edges<std::uint8_t>(2, heavy), std::out_of_range);
  CHECK(from_edges<std::uint16_t>(2, heavy).raw(0, 1) == 65535 - 256);
}

TEST_CASE_TEMPLATE("entrywise table", T, WIDTHS) {
  AntidistMat<T> a(1, 1), b(1, 1);
  a.set_raw(0, 0, 10);
  b.set_raw(0, 0, 3);
  CHECK(entrywise_xor(a, b).raw(0, 0) == 7);
  CHECK(entrywise_xor(b, a).raw(0, 0) == 7);
  CHECK(entrywise_and(a, b).raw(0, 0) == 3);
  CHECK(entrywise_or(a, b).raw(0, 0) == 10);
  CHECK(entrywise_not(a).raw(0, 0) == saturation_v<T> - 10);

  Rng rng(2);
  for (std::size_t cols : {1u, 15u, 16u, 17u, 65u}) {
    const auto x = random_sat<T>(rng, 3, cols);
    const auto y = random_sat<T>(rng, 3, cols);
    CHECK(entrywise_and(x, x) == x);
    CHECK(entrywise_or(x, x) == x);
    CHECK(entrywise_not(entrywise_not(x)) == x);
    const auto nx = entrywise_not(x);
    CHECK(padding_ok(nx));
    CHECK(padding_ok(entrywise_xor(nx, entrywise_not(y))));
    CHECK(padding_ok(entrywise_xor(x, y)));
  }
  CHECK_THROWS_AS(entrywise_and(AntidistMat<T>(1, 2), AntidistMat<T>(2, 1)), std::invalid_argument);
}

TEST_CASE_TEMPLATE("multiplication", T, WIDTHS) {
  constexpr T S = saturation_v<T>;
  AntidistMat<T> a(3, 3), b(3, 3);
  a.set_raw(0, 1, S - 3);
  b.set_raw(1, 2, S - 4);
  const auto p = mul(a, b);
  CHECK(p.raw(0, 2) == S - 7);
  CHECK(dense(p).cell == std::vector<std::uint64_t>{0, 0, S - 7u, 0, 0, 0, 0, 0, 0});
  CHECK(mul(a, AntidistMat<T>::zero(3, 3)) == AntidistMat<T>::zero(3, 3));
  CHECK_THROWS_AS(mul(AntidistMat<T>(2, 3), AntidistMat<T>(2, 3)), std::invalid_argument);

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = uniform(rng, 1, 32), c = uniform(rng, 1, 32), cc = uniform(rng, 1, 40);
    const auto x = random_sat<T>(rng, r, c);
    const auto y = random_sat<T>(rng, c, cc);
    const auto prod = mul(x, y);
    REQUIRE(dense(prod) == oracle::naive_antidist_mul(dense(x), dense(y)));
    REQUIRE(padding_ok(prod));
  }
}

TEST_CASE("width-8 multiplication example") {
  AntidistMat<std::uint8_t> a(3, 3), b(3, 3);
  a.set_raw(0, 1, 252);
  b.set_raw(1, 2, 251);
  CHECK(mul(a, b).raw(0, 2) == 248);
}

TEST_CASE_TEMPLATE("closure against Dijkstra", T, WIDTHS) {
  constexpr T S = saturation_v<T>;
  const GraphSpec path{3, path_edges(), true};
  const auto closed = transclosure(from_edges<T>(3, path.edges));
  CHECK(closed.raw(0, 2) == S - 7);
  CHECK(closed.raw(0, 0) == 0);
  CHECK(dense(closed) == oracle::apsp_dijkstra(path, S));
  CHECK(transclosure(AntidistMat<T>::zero(4, 4)) == AntidistMat<T>::zero(4, 4));

  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = uniform(rng, 1, 40);
    const auto g = random_graph(rng, d, 0.1 + 0.4 * uniform(rng, 0, 4) / 4.0, 1, 10);
    const auto adj = from_edges<T>(d, g.edges);
    auto in_place = adj;
    transclose(in_place);
    const auto t = transclosure(adj);
    REQUIRE(t == in_place);
    REQUIRE(dense(t) == oracle::apsp_dijkstra(g, S));
    REQUIRE(padding_ok(t));
  }
  CHECK_THROWS_AS(transclosure(AntidistMat<T>(2, 3)), std::invalid_argument);
}

TEST_CASE("width-8 path closure saturates long paths") {
  // 0 -> 1 -> 2 -> 3 with weight 100 each: d(0,3) = 300 >= 255.
  const std::vector<Edge> edges{{0, 1, 100}, {1, 2, 100}, {2, 3, 100}};
  const auto t = transclosure(from_edges<std::uint8_t>(4, edges));
  CHECK(t.raw(0, 2) == 55);
  CHECK(t.raw(0, 3) == 0);
  CHECK(t.raw(1, 3) == 55);
}

TEST_CASE_TEMPLATE("closure properties", T, WIDTHS) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = uniform(rng, 1, 32);
    const auto a = random_sat<T>(rng, d, d);
    const auto t = transclosure(a);
    REQUIRE(t == squaring_closure(a));
    // T(i,j) >= T(i,k) * T(k,j)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j)
          REQUIRE(t.at(i, j) >= sat_mul(t.at(i, k), t.at(k, j)));
  }
}

TEST_CASE_TEMPLATE("De Morgan at matrix level", T, WIDTHS) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = uniform(rng, 1, 20), c = uniform(rng, 1, 20), cc = uniform(rng, 1, 20);
    const auto a = random_sat<T>(rng, r, c), b = random_sat<T>(rng, r, c), m = random_sat<T>(rng, c, cc);
    REQUIRE(entrywise_not(entrywise_or(a, b)) == entrywise_and(entrywise_not(a), entrywise_not(b)));
    REQUIRE(entrywise_not(mul(a, m)) == funny_mul_mat(entrywise_not(a), entrywise_not(m)));
    REQUIRE(dense(funny_mul_mat(entrywise_not(a), entrywise_not(m))) ==
            oracle::naive_funny_mul(dense(entrywise_not(a)), dense(entrywise_not(m))));
    const auto sq = random_sat<T>(rng, r, r);
    REQUIRE(dransclosure(entrywise_not(sq)) == entrywise_not(transclosure(sq)));
  }
}

TEST_CASE_TEMPLATE("funny identity and absorbing matrix", T, WIDTHS) {
  Rng rng(7);
  const auto a = random_sat<T, Encoding::distance>(rng, 6, 6);
  CHECK(funny_mul_mat(DistMat<T>::identity(6), a) == a);
  CHECK(funny_mul_mat(a, DistMat<T>::identity(6)) == a);
  CHECK(funny_mul_mat(DistMat<T>::zero(6, 6), a) == DistMat<T>::zero(6, 6));
  CHECK(dransclosure(DistMat<T>::zero(6, 6)) == DistMat<T>::zero(6, 6));
}

TEST_CASE("dransclosure reports loop lengths on the diagonal") {
  const GraphSpec g{2, {{0, 1, 3}, {1, 0, 4}}, true};
  const auto t = dransclosure(entrywise_not(from_edges<std::uint8_t>(2, g.edges)));
  CHECK(t.raw(0, 0) == 7);
  CHECK(t.raw(1, 1) == 7);
  CHECK(t.raw(0, 1) == 3);
  CHECK(t.raw(1, 0) == 4);
  const auto cycles = oracle::min_cycle_lengths(g, 255);
  CHECK(t.raw(0, 0) == cycles[0]);
  CHECK(t.raw(1, 1) == cycles[1]);

  DistMat<std::uint8_t> in_place = entrywise_not(from_edges<std::uint8_t>(2, g.edges));
  dransclose(in_place);
  CHECK(in_place == t);
}

TEST_CASE("dransclosure diagonal matches cycle enumeration") {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = uniform(rng, 1, 6);
    const auto g = random_graph(rng, d, 0.35, 0, 40);
    const auto t = dransclosure(entrywise_not(from_edges<std::uint8_t>(d, g.edges)));
    const auto cycles = oracle::min_cycle_lengths(g, 255);
    for (std::size_t v = 0; v < d; ++v) REQUIRE(t.raw(v, v) == cycles[v]);
  }
}

TEST_CASE_TEMPLATE("bridging to Boolean matrices", T, WIDTHS) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = uniform(rng, 1, 70);
    const BoolMat b = random_bool(rng, d, d, 2.0 / d);
    CHECK(to_boolmat(from_boolmat<T>(b)) == b);
    CHECK(to_boolmat(transclosure(from_boolmat<T>(b))) == transitive_closure(b));
  }
  CHECK(from_boolmat<T>(BoolMat::identity(4)) == AntidistMat<T>::identity(4));
}

TEST_CASE("width consistency for short distances") {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = uniform(rng, 2, 30);
    const auto g = random_graph(rng, d, 0.2, 1, 5);  // every path < 5 * 30 < 255
    const auto t8 = transclosure(from_edges<std::uint8_t>(d, g.edges));
    const auto t16 = transclosure(from_edges<std::uint16_t>(d, g.edges));
    const auto t32 = transclosure(from_edges<std::uint32_t>(d, g.edges));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const bool reach = t8.raw(i, j) != 0;
        REQUIRE(reach == (t16.raw(i, j) != 0));
        REQUIRE(reach == (t32.raw(i, j) != 0));
        if (reach) {
          REQUIRE(delta(t8.at(i, j)) == delta(t16.at(i, j)));
          REQUIRE(delta(t16.at(i, j)) == delta(t32.at(i, j)));
        }
      }
  }
}

TEST_CASE("scalar and vector paths agree on matrix operations") {
  if (!kernels::vector_supported()) return;
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = uniform(rng, 1, 50);
    const auto a = random_sat<std::uint16_t>(rng, d, d);
    AntidistMat<std::uint16_t> scalar_mul(1, 1), scalar_close(1, 1);
    DistMat<std::uint16_t> scalar_drans(1, 1);
    {
      kernels::ScopedIsa s(kernels::Isa::scalar);
      scalar_mul = mul(a, a);
      scalar_close = transclosure(a);
      scalar_drans = dransclosure(entrywise_not(a));
    }
    kernels::ScopedIsa v(kernels::Isa::sse41);
    REQUIRE(mul(a, a) == scalar_mul);
    REQUIRE(transclosure(a) == scalar_close);
    REQUIRE(dransclosure(entrywise_not(a)) == scalar_drans);
  }
}
