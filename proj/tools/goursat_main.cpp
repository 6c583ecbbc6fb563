// goursat: enumerate, decompose and classify subgroups of finite direct products.
//
//   goursat enumerate Z2xZ2 [--verify]
//   goursat decompose Z2xZ3 --gens "(1,1)"
//   goursat classify Z2xZ3xZ5 --gens "(1,1,1)"
//   goursat lattice Z4 --dot
//   goursat verify S3xZ4

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "goursat/commands.hpp"

int main(int argc, char** argv) {
  namespace cli = goursat::cli;

  CLI::App app{"Subgroups of finite direct products via Goursat's lemma"};
  app.require_subcommand(1);

  std::string expr;
  std::string gens;
  std::size_t max_order = 0;
  bool verify = false;
  bool dot = false;
  bool json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("group", expr, "Group expression, e.g. \"S3 x Z2\"")->required();
    sub->add_option("--max-order", max_order,
                    "Enumeration order cap (default 400, or GOURSAT_MAX_ORDER)");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List every subgroup with its Goursat chain");
  add_common(enumerate);
  enumerate->add_flag("--verify", verify, "Cross-check against brute-force enumeration");
  enumerate->add_flag("--json", json, "JSON output (default)");

  auto* decompose = app.add_subcommand("decompose", "Goursat chain of a generated subgroup");
  add_common(decompose);
  decompose->add_option("--gens", gens, "Generators, e.g. \"(1,0),(0,1)\"")->required();
  decompose->add_flag("--json", json, "JSON output (default)");

  auto* classify = app.add_subcommand("classify", "Cyclicity and projection predicates");
  add_common(classify);
  classify->add_option("--gens", gens, "Generators, e.g. \"(1,1)\"")->required();
  classify->add_flag("--json", json, "JSON output (default)");

  auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the subgroup lattice");
  add_common(lattice);
  auto* dot_flag = lattice->add_flag("--dot", dot, "Graphviz DOT output");
  lattice->add_flag("--json", json, "JSON output (default)")->excludes(dot_flag);

  auto* verify_cmd = app.add_subcommand("verify", "Check every correspondence on all subgroups");
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsageError;
  }

  cli::Options opts;
  opts.verify = verify;
  if (max_order != 0) {
    opts.max_order = max_order;
  } else if (const std::size_t env = cli::max_order_from_env(); env != 0) {
    opts.max_order = env;
  }

  cli::Result result;
  if (enumerate->parsed()) {
    result = cli::run_enumerate(expr, opts);
  } else if (decompose->parsed()) {
    result = cli::run_decompose(expr, gens, opts);
  } else if (classify->parsed()) {
    result = cli::run_classify(expr, gens, opts);
  } else if (lattice->parsed()) {
    result = cli::run_lattice(expr, dot, opts);
  } else {
    result = cli::run_verify(expr, opts);
  }

  if (!result.output.empty()) std::cout << result.output << '\n';
  if (!result.error.empty()) std::cerr << "goursat: " << result.error << '\n';
  return result.exit_code;
}
