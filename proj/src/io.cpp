#include "srmat/io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace srmat {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

std::uint64_t parse_number(std::string_view s, const std::string& where) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw FormatError(where + ": invalid number '" + std::string(s) + "'");
  }
  return v;
}

std::size_t parse_dim(std::string_view s, const char* what) {
  const std::uint64_t v = parse_number(s, std::string("header ") + what);
  if (v == 0 || v > 0xffffffffu) throw FormatError(std::string("header: ") + what + " out of range");
  return static_cast<std::size_t>(v);
}

template <SatWord T, Encoding E>
SatMatrix<T, E> parse_sat_body(const std::vector<std::string_view>& lines, std::size_t rows, std::size_t cols) {
  std::vector<T> values;
  values.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string where = "line " + std::to_string(i + 2);
    const auto words = split_words(lines[i + 1]);
    if (words.size() != cols) {
      throw FormatError(where + ": expected " + std::to_string(cols) + " values, got " + std::to_string(words.size()));
    }
    for (auto w : words) {
      const std::uint64_t v = parse_number(w, where);
      if (v > saturation_v<T>) throw FormatError(where + ": value " + std::to_string(v) + " exceeds " + std::to_string(saturation_v<T>));
      values.push_back(static_cast<T>(v));
    }
  }
  return SatMatrix<T, E>::from_values(rows, cols, values);
}

template <Encoding E>
AnyMatrix parse_sat_text(const std::vector<std::string_view>& lines, unsigned width, std::size_t rows, std::size_t cols) {
  switch (width) {
    case 8:
      return parse_sat_body<std::uint8_t, E>(lines, rows, cols);
    case 16:
      return parse_sat_body<std::uint16_t, E>(lines, rows, cols);
    case 32:
      return parse_sat_body<std::uint32_t, E>(lines, rows, cols);
    default:
      throw FormatError("header: unsupported width " + std::to_string(width));
  }
}

// Little-endian byte writer / reader.
struct Writer {
  std::vector<std::byte> out;
  template <class U>
  void put(U v) {
    for (std::size_t b = 0; b < sizeof(U); ++b) out.push_back(static_cast<std::byte>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xffu));
  }
};

struct Reader {
  std::span<const std::byte> in;
  std::size_t pos = 0;
  template <class U>
  U get() {
    if (in.size() - pos < sizeof(U)) throw FormatError("binary: truncated payload");
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < sizeof(U); ++b) v |= static_cast<std::uint64_t>(in[pos + b]) << (8 * b);
    pos += sizeof(U);
    return static_cast<U>(v);
  }
};

void write_header(Writer& w, TypeTag tag, unsigned width, std::size_t rows, std::size_t cols) {
  if (rows > 0xffffffffu || cols > 0xffffffffu) throw FormatError("binary: dimensions exceed 32 bits");
  for (char c : binary_magic) w.put(static_cast<std::uint8_t>(c));
  w.put(static_cast<std::uint8_t>(tag));
  w.put(static_cast<std::uint8_t>(width));
  w.put(static_cast<std::uint32_t>(rows));
  w.put(static_cast<std::uint32_t>(cols));
}

template <SatWord T, Encoding E>
AnyMatrix read_sat_payload(Reader& r, std::size_t rows, std::size_t cols) {
  if ((r.in.size() - r.pos) != rows * cols * sizeof(T)) throw FormatError("binary: payload size does not match header");
  std::vector<T> values(rows * cols);
  for (auto& v : values) v = r.get<T>();
  return SatMatrix<T, E>::from_values(rows, cols, values);
}

template <Encoding E>
AnyMatrix read_sat_binary(Reader& r, unsigned width, std::size_t rows, std::size_t cols) {
  switch (width) {
    case 8:
      return read_sat_payload<std::uint8_t, E>(r, rows, cols);
    case 16:
      return read_sat_payload<std::uint16_t, E>(r, rows, cols);
    case 32:
      return read_sat_payload<std::uint32_t, E>(r, rows, cols);
    default:
      throw FormatError("binary: unsupported width " + std::to_string(width));
  }
}

}  // namespace

std::string to_text(const BoolMat& m) {
  std::string out = "bool " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  out.reserve(out.size() + m.rows() * (m.cols() + 1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

template <SatWord T, Encoding E>
std::string to_text(const SatMatrix<T, E>& m) {
  std::ostringstream os;
  os << (E == Encoding::antidistance ? "antidist " : "dist ") << width_v<T> << ' ' << m.rows() << ' ' << m.cols()
     << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << static_cast<std::uint64_t>(m.raw(i, j));
    }
    os << '\n';
  }
  return os.str();
}

std::string to_text(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return to_text(x); }, m);
}

std::vector<std::byte> to_binary(const BoolMat& m) {
  Writer w;
  write_header(w, TypeTag::boolean, 1, m.rows(), m.cols());
  for (BoolMat::Block b : m.blocks()) w.put(b);
  return std::move(w.out);
}

template <SatWord T, Encoding E>
std::vector<std::byte> to_binary(const SatMatrix<T, E>& m) {
  Writer w;
  write_header(w, E == Encoding::antidistance ? TypeTag::antidist : TypeTag::dist, width_v<T>, m.rows(), m.cols());
  for (T v : m.values()) w.put(v);
  return std::move(w.out);
}

std::vector<std::byte> to_binary(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return to_binary(x); }, m);
}

AnyMatrix parse_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw FormatError("empty matrix file");
  const auto head = split_words(lines[0]);
  if (head.empty()) throw FormatError("header: missing type");

  if (head[0] == "bool") {
    if (head.size() != 3) throw FormatError("header: expected 'bool R C'");
    const std::size_t rows = parse_dim(head[1], "rows");
    const std::size_t cols = parse_dim(head[2], "cols");
    if (lines.size() != rows + 1) {
      throw FormatError("expected " + std::to_string(rows) + " rows, got " + std::to_string(lines.size() - 1));
    }
    BoolMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string_view row = lines[i + 1];
      if (row.size() != cols) throw FormatError("line " + std::to_string(i + 2) + ": expected " + std::to_string(cols) + " characters");
      for (std::size_t j = 0; j < cols; ++j) {
        if (row[j] != '0' && row[j] != '1') throw FormatError("line " + std::to_string(i + 2) + ": invalid character");
        if (row[j] == '1') m.set(i, j, true);
      }
    }
    return m;
  }

  if (head[0] == "antidist" || head[0] == "dist") {
    if (head.size() != 4) throw FormatError("header: expected '" + std::string(head[0]) + " W R C'");
    const auto width = static_cast<unsigned>(parse_number(head[1], "header width"));
    const std::size_t rows = parse_dim(head[2], "rows");
    const std::size_t cols = parse_dim(head[3], "cols");
    if (lines.size() != rows + 1) {
      throw FormatError("expected " + std::to_string(rows) + " rows, got " + std::to_string(lines.size() - 1));
    }
    return head[0] == "antidist" ? parse_sat_text<Encoding::antidistance>(lines, width, rows, cols)
                                 : parse_sat_text<Encoding::distance>(lines, width, rows, cols);
  }
  throw FormatError("header: unknown matrix type '" + std::string(head[0]) + "'");
}

AnyMatrix parse_binary(std::span<const std::byte> data) {
  if (data.size() < binary_header_size) throw FormatError("binary: truncated header");
  if (std::memcmp(data.data(), binary_magic.data(), binary_magic.size()) != 0) throw FormatError("binary: bad magic");
  Reader r{data, binary_magic.size()};
  const auto tag = r.get<std::uint8_t>();
  const auto width = r.get<std::uint8_t>();
  const std::size_t rows = r.get<std::uint32_t>();
  const std::size_t cols = r.get<std::uint32_t>();
  if (rows == 0 || cols == 0) throw FormatError("binary: dimensions must be positive");

  switch (static_cast<TypeTag>(tag)) {
    case TypeTag::boolean: {
      if (width != 1) throw FormatError("binary: bool width must be 1");
      const std::size_t n = rows * ((cols + BoolMat::block_bits - 1) / BoolMat::block_bits);
      if (data.size() - r.pos != n * sizeof(BoolMat::Block)) throw FormatError("binary: payload size does not match header");
      std::vector<BoolMat::Block> blocks(n);
      for (auto& b : blocks) b = r.get<BoolMat::Block>();
      try {
        return BoolMat::from_blocks(rows, cols, blocks);
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("binary: ") + e.what());
      }
    }
    case TypeTag::antidist:
      return read_sat_binary<Encoding::antidistance>(r, width, rows, cols);
    case TypeTag::dist:
      return read_sat_binary<Encoding::distance>(r, width, rows, cols);
  }
  throw FormatError("binary: unknown type tag " + std::to_string(tag));
}

AnyMatrix parse_any(std::span<const std::byte> data) {
  if (data.size() >= binary_magic.size() && std::memcmp(data.data(), binary_magic.data(), binary_magic.size()) == 0) {
    return parse_binary(data);
  }
  return parse_text(std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

std::vector<std::byte> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::byte> out(buf.size());
  std::memcpy(out.data(), buf.data(), buf.size());
  return out;
}

void write_file(const std::string& path, std::span<const std::byte> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

AnyMatrix read_matrix_file(const std::string& path) {
  const auto data = read_file(path);
  try {
    return parse_any(data);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string type_name(const AnyMatrix& m) {
  return std::visit(
      [](const auto& x) -> std::string {
        using M = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<M, BoolMat>) {
          return "bool";
        } else {
          return std::string(M::encoding == Encoding::antidistance ? "antidist" : "dist") +
                 std::to_string(width_v<typename M::word_type>);
        }
      },
      m);
}

#define SRMAT_INSTANTIATE_IO(T)                                                       \
  template std::string to_text(const SatMatrix<T, Encoding::antidistance>&);          \
  template std::string to_text(const SatMatrix<T, Encoding::distance>&);              \
  template std::vector<std::byte> to_binary(const SatMatrix<T, Encoding::antidistance>&); \
  template std::vector<std::byte> to_binary(const SatMatrix<T, Encoding::distance>&);

SRMAT_INSTANTIATE_IO(std::uint8_t)
SRMAT_INSTANTIATE_IO(std::uint16_t)
SRMAT_INSTANTIATE_IO(std::uint32_t)

#undef SRMAT_INSTANTIATE_IO

}  // namespace srmat
