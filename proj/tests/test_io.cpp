#include <cstring>

#include "doctest.h"
#include "srmat/io.hpp"
#include "support.hpp"

using namespace srmat;
using namespace testing_support;

namespace {

std::span<const std::byte> bytes_of(const std::string& s) { return std::as_bytes(std::span(s.data(), s.size())); }

template <class M>
void check_round_trip(const M& m) {
  const AnyMatrix any = m;
  CHECK(std::get<M>(parse_text(to_text(m))) == m);
  CHECK(std::get<M>(parse_binary(to_binary(m))) == m);
  CHECK(std::get<M>(parse_any(to_binary(any))) == m);
  const std::string text = to_text(any);
  CHECK(std::get<M>(parse_any(bytes_of(text))) == m);
}

}  // namespace

TEST_CASE("text format layout") {
  BoolMat b(2, 3);
  b.set(0, 2, true);
  CHECK(to_text(b) == "bool 2 3\n001\n000\n");
  AntidistMat<std::uint16_t> a(2, 2);
  a.set_raw(0, 1, 65535);
  CHECK(to_text(a) == "antidist 16 2 2\n0 65535\n0 0\n");
  CHECK(to_text(entrywise_not(a)) == "dist 16 2 2\n65535 0\n65535 65535\n");
}

TEST_CASE("binary header layout") {
  BoolMat b(3, 65);
  b.set(2, 64, true);
  const auto bytes = to_binary(b);
  REQUIRE(bytes.size() == 16 + 3 * 2 * 8);
  CHECK(std::memcmp(bytes.data(), "SRMAT1", 6) == 0);
  CHECK(bytes[6] == std::byte{0});
  CHECK(bytes[7] == std::byte{1});
  CHECK(bytes[8] == std::byte{3});
  CHECK(bytes[12] == std::byte{65});
  CHECK(bytes[16 + 5 * 8] == std::byte{1});

  AntidistMat<std::uint32_t> a(1, 2);
  a.set_raw(0, 1, 0x01020304u);
  const auto ab = to_binary(a);
  REQUIRE(ab.size() == 16 + 8);
  CHECK(ab[6] == std::byte{1});
  CHECK(ab[7] == std::byte{32});
  CHECK(ab[20] == std::byte{4});
  CHECK(ab[23] == std::byte{1});
  CHECK(to_binary(entrywise_not(a))[6] == std::byte{2});
}

TEST_CASE("round trips keep every matrix type intact") {
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = uniform(rng, 1, 9);
    const std::size_t c = trial % 3 == 0 ? 65 : uniform(rng, 1, 140);
    check_round_trip(random_bool(rng, r, c, 0.5));
    check_round_trip(random_sat<std::uint8_t>(rng, r, c));
    check_round_trip(random_sat<std::uint16_t>(rng, r, c));
    check_round_trip(random_sat<std::uint32_t>(rng, r, c));
    check_round_trip(random_sat<std::uint8_t, Encoding::distance>(rng, r, c));
    check_round_trip(random_sat<std::uint16_t, Encoding::distance>(rng, r, c));
    check_round_trip(random_sat<std::uint32_t, Encoding::distance>(rng, r, c));
  }
}

TEST_CASE("malformed text is rejected") {
  CHECK_THROWS_AS(parse_text(""), FormatError);
  CHECK_THROWS_AS(parse_text("matrix 2 2\n"), FormatError);
  CHECK_THROWS_AS(parse_text("bool 2 2\n01\n"), FormatError);
  CHECK_THROWS_AS(parse_text("bool 1 2\n012\n"), FormatError);
  CHECK_THROWS_AS(parse_text("bool 1 2\n0x\n"), FormatError);
  CHECK_THROWS_AS(parse_text("bool 0 2\n"), FormatError);
  CHECK_THROWS_AS(parse_text("antidist 8 1 2\n1 256\n"), FormatError);
  CHECK_THROWS_AS(parse_text("antidist 12 1 1\n1\n"), FormatError);
  CHECK_THROWS_AS(parse_text("dist 8 1 2\n1\n"), FormatError);
  CHECK_NOTHROW(parse_text("bool 1 2\r\n01\r\n\n"));
}

TEST_CASE("malformed binary is rejected") {
  auto bytes = to_binary(AntidistMat<std::uint8_t>(2, 2));
  auto truncated = bytes;
  truncated.pop_back();
  CHECK_THROWS_AS(parse_binary(truncated), FormatError);
  auto bad_magic = bytes;
  bad_magic[0] = std::byte{'X'};
  CHECK_THROWS_AS(parse_binary(bad_magic), FormatError);
  auto bad_width = bytes;
  bad_width[7] = std::byte{12};
  CHECK_THROWS_AS(parse_binary(bad_width), FormatError);
  auto bad_tag = bytes;
  bad_tag[6] = std::byte{9};
  CHECK_THROWS_AS(parse_binary(bad_tag), FormatError);

  BoolMat b(1, 3);
  auto bb = to_binary(b);
  bb[16] = std::byte{0x08};  // column 3 is padding
  CHECK_THROWS_AS(parse_binary(bb), FormatError);
}

TEST_CASE("type names") {
  CHECK(type_name(BoolMat(1, 1)) == "bool");
  CHECK(type_name(AntidistMat<std::uint16_t>(1, 1)) == "antidist16");
  CHECK(type_name(DistMat<std::uint32_t>(1, 1)) == "dist32");
}
