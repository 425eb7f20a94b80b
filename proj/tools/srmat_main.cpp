// srmat: reachability and shortest-path closures over packed semiring
// matrices.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "srmat/kernels.hpp"

int main(int argc, char** argv) {
  using namespace srmat;

  CLI::App app{"Semiring matrix tools: closures, products and kernel benchmarks"};
  app.require_subcommand(1);

  cli::ClosureOptions copts;
  cli::OutputOptions cout_opts;
  std::string graph_path;
  unsigned width_flag = 8;
  auto* closure_cmd = app.add_subcommand("closure", "Transitive closure / APSP of an edge-list graph");
  closure_cmd->add_option("graph", graph_path, "Edge-list file ('-' for stdin)")->required();
  closure_cmd->add_flag("--bool", copts.boolean, "Boolean reachability (Warshall)");
  auto* width_opt = closure_cmd->add_option("--width", width_flag, "Anti-distance word width: 8, 16 or 32 (default 8)");
  closure_cmd->add_flag("--reflexive", copts.reflexive, "Include paths of length 0 (Boolean only)");
  closure_cmd->add_flag("--dist", copts.dist, "Emit the distance matrix (min-plus closure)");
  closure_cmd->add_flag("--binary", cout_opts.binary, "Write the binary format");
  closure_cmd->add_option("-o,--output", cout_opts.path, "Output file (default stdout)");

  std::string mul_a, mul_b;
  cli::OutputOptions mul_out;
  auto* mul_cmd = app.add_subcommand("multiply", "Semiring product of two matrix files");
  mul_cmd->add_option("a", mul_a, "Left matrix file")->required();
  mul_cmd->add_option("b", mul_b, "Right matrix file")->required();
  mul_cmd->add_flag("--binary", mul_out.binary, "Write the binary format");
  mul_cmd->add_option("-o,--output", mul_out.path, "Output file (default stdout)");

  std::string conv_in, conv_to = "text";
  bool conv_negate = false;
  cli::OutputOptions conv_out;
  auto* conv_cmd = app.add_subcommand("convert", "Convert between text and binary matrix formats");
  conv_cmd->add_option("input", conv_in, "Matrix file")->required();
  conv_cmd->add_option("--to", conv_to, "Output format")->check(CLI::IsMember({"text", "binary"}));
  conv_cmd->add_flag("--negate", conv_negate, "Flip antidist <-> dist (S - a per entry)");
  conv_cmd->add_option("-o,--output", conv_out.path, "Output file (default stdout)");

  BenchOptions bopts;
  std::string bench_op = "mul";
  auto* bench_cmd = app.add_subcommand("bench", "Time scalar against vector kernels on a seeded random input");
  bench_cmd->add_option("--op", bench_op, "mul or closure")->check(CLI::IsMember({"mul", "closure"}));
  bench_cmd->add_option("--size", bopts.size, "Matrix dimension");
  bench_cmd->add_option("--width", bopts.width, "Word width: 8, 16 or 32");
  bench_cmd->add_option("--seed", bopts.seed, "Random seed");
  bench_cmd->add_option("--repeats", bopts.repeats, "Runs per variant (fastest is reported)");

  app.footer("Set SRMAT_FORCE_SCALAR=1 to disable the vector kernels.");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*closure_cmd) {
      if (width_opt->count() > 0) copts.width = width_flag;
      cli::validate(copts);
      const GraphSpec g = parse_edge_list(cli::read_text_input(graph_path), cli::max_weight(copts));
      cli::emit(cli::closure(g, copts), cout_opts, std::cout);
    } else if (*mul_cmd) {
      cli::emit(cli::multiply(read_matrix_file(mul_a), read_matrix_file(mul_b)), mul_out, std::cout);
    } else if (*conv_cmd) {
      AnyMatrix m = read_matrix_file(conv_in);
      if (conv_negate) m = cli::negate(m);
      conv_out.binary = conv_to == "binary";
      cli::emit(m, conv_out, std::cout);
    } else if (*bench_cmd) {
      bopts.op = bench_op == "closure" ? BenchOp::closure : BenchOp::mul;
      std::cerr << "kernels: " << kernels::isa_name(kernels::detected_isa()) << '\n';
      return cli::bench(bopts, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "srmat: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
