#pragma once

// Matrix serialization.
//
// Text:
//   bool R C            then R lines of C characters '0' / '1'
//   antidist W R C      then R lines of C decimal values
//   dist W R C          (same, distance encoding)
//
// Binary: a 16-byte header followed by the payload, all little-endian.
//   offset 0   "SRMAT1"  magic
//   offset 6   u8        type tag: 0 bool, 1 antidist, 2 dist
//   offset 7   u8        width in bits (1 for bool, else 8 / 16 / 32)
//   offset 8   u32       rows
//   offset 12  u32       cols
// Bool payload: rows * ceil(cols / 64) u64 blocks, row-major, padding bits
// zero. Saturated payload: rows * cols words of the given width, row-major,
// no padding.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "srmat/antidist.hpp"
#include "srmat/boolmat.hpp"

namespace srmat {

using AnyMatrix = std::variant<BoolMat, AntidistMat<std::uint8_t>, AntidistMat<std::uint16_t>,
                               AntidistMat<std::uint32_t>, DistMat<std::uint8_t>, DistMat<std::uint16_t>,
                               DistMat<std::uint32_t>>;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view binary_magic = "SRMAT1";
inline constexpr std::size_t binary_header_size = 16;

enum class TypeTag : std::uint8_t { boolean = 0, antidist = 1, dist = 2 };

std::string to_text(const BoolMat& m);
template <SatWord T, Encoding E>
std::string to_text(const SatMatrix<T, E>& m);
std::string to_text(const AnyMatrix& m);

std::vector<std::byte> to_binary(const BoolMat& m);
template <SatWord T, Encoding E>
std::vector<std::byte> to_binary(const SatMatrix<T, E>& m);
std::vector<std::byte> to_binary(const AnyMatrix& m);

/// Throw FormatError on malformed input.
AnyMatrix parse_text(std::string_view text);
AnyMatrix parse_binary(std::span<const std::byte> data);
/// Binary if the data starts with the magic, text otherwise.
AnyMatrix parse_any(std::span<const std::byte> data);

AnyMatrix read_matrix_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::byte> data);
std::vector<std::byte> read_file(const std::string& path);

/// "bool", "antidist8", "dist32", ...
std::string type_name(const AnyMatrix& m);

}  // namespace srmat
