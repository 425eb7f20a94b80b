#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <type_traits>

#include "srmat/antidist.hpp"
#include "srmat/boolmat.hpp"

namespace srmat::cli {
namespace {

template <SatWord T>
AnyMatrix sat_closure(const GraphSpec& g, bool dist) {
  const auto adj = from_edges<T>(g.vertex_count, g.edges);
  if (dist) return dransclosure(entrywise_not(adj));
  return transclosure(adj);
}

}  // namespace

void validate(const ClosureOptions& opts) {
  if (opts.boolean && opts.width) throw UsageError("--bool and --width are mutually exclusive");
  if (opts.boolean && opts.dist) throw UsageError("--dist requires a weighted closure, not --bool");
  if (opts.reflexive && !opts.boolean) throw UsageError("--reflexive is only valid with --bool");
  if (opts.width && *opts.width != 8 && *opts.width != 16 && *opts.width != 32) {
    throw UsageError("--width must be 8, 16 or 32");
  }
}

std::uint64_t max_weight(const ClosureOptions& opts) {
  if (opts.boolean) return 0xffffffffu;
  return (std::uint64_t{1} << opts.width.value_or(8)) - 1;
}

AnyMatrix closure(const GraphSpec& g, const ClosureOptions& opts) {
  validate(opts);
  if (opts.boolean) {
    BoolMat adj(g.vertex_count, g.vertex_count);
    for (const Edge& e : g.edges) adj.set(e.source, e.target, true);
    return opts.reflexive ? reflexive_transitive_closure(adj) : transitive_closure(adj);
  }
  check_weights(g, max_weight(opts));
  switch (opts.width.value_or(8)) {
    case 16:
      return sat_closure<std::uint16_t>(g, opts.dist);
    case 32:
      return sat_closure<std::uint32_t>(g, opts.dist);
    default:
      return sat_closure<std::uint8_t>(g, opts.dist);
  }
}

AnyMatrix multiply(const AnyMatrix& a, const AnyMatrix& b) {
  if (a.index() != b.index()) {
    throw UsageError("cannot multiply " + type_name(a) + " by " + type_name(b));
  }
  return std::visit(
      [&](const auto& x) -> AnyMatrix {
        using M = std::decay_t<decltype(x)>;
        const auto& y = std::get<M>(b);
        if (x.cols() != y.rows()) {
          throw UsageError("shape mismatch: " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + " * " +
                           std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
        }
        if constexpr (std::is_same_v<M, BoolMat>) {
          return mul(x, y);
        } else if constexpr (M::encoding == Encoding::antidistance) {
          return mul(x, y);
        } else {
          return funny_mul_mat(x, y);
        }
      },
      a);
}

AnyMatrix negate(const AnyMatrix& m) {
  return std::visit(
      [](const auto& x) -> AnyMatrix {
        using M = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<M, BoolMat>) {
          throw UsageError("--negate applies to antidist and dist matrices only");
        } else {
          return entrywise_not(x);
        }
      },
      m);
}

void emit(const AnyMatrix& m, const OutputOptions& out, std::ostream& stdout_stream) {
  const bool to_stdout = out.path.empty() || out.path == "-";
  if (out.binary) {
    const auto bytes = to_binary(m);
    if (to_stdout) {
      stdout_stream.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    } else {
      write_file(out.path, bytes);
    }
    return;
  }
  const std::string text = to_text(m);
  if (to_stdout) {
    stdout_stream << text;
  } else {
    write_file(out.path, std::as_bytes(std::span(text.data(), text.size())));
  }
}

std::string read_text_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  const BenchResult r = run_bench(opts);
  if (!r.notice.empty()) err << "notice: " << r.notice << '\n';
  for (const auto& rep : r.reports) out << format_report(rep) << '\n';
  if (r.vector_available) out << "equality check: passed\n";
  return 0;
}

}  // namespace srmat::cli
