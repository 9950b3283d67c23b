#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = endosimplex::cli;

int main(int argc, char** argv) {
  CLI::App app{"Endomorphism simplices of finite chains"};
  app.require_subcommand(1);

  cli::SimplexArgs simplex;
  std::string list_format = "runlength";
  std::string table_format = "csv";
  std::string op = "mul";
  std::string suite = "all";
  unsigned max_n = 6;
  std::uint64_t seed = 1;
  bool count_only = false;
  bool timing = false;

  auto add_simplex = [&](CLI::App* sub) {
    sub->add_option("--n", simplex.n, "Chain length n")->required();
    sub->add_option("--vertices", simplex.vertices, "Vertex set a_0<...<a_{k-1}")
        ->delimiter(',')
        ->required();
    sub->add_option("--cap", simplex.cap, "Enumeration size guard");
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the members of a simplex");
  add_simplex(enumerate);
  enumerate->add_option("--format", list_format, "json, tuple or runlength")->capture_default_str();
  enumerate->add_flag("--count-only", count_only, "Print only the cardinality");

  auto* classify = app.add_subcommand("classify", "Partition a simplex by type (JSON)");
  add_simplex(classify);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite (JSON)");
  verify->add_option("--suite", suite, "axioms, simplex, strata, typemap, counts or all");
  verify->add_option("--max-n", max_n, "Largest chain length swept");
  verify->add_option("--seed", seed, "Seed for random subsets");
  verify->add_flag("--timing", timing, "Include elapsed times (output no longer byte-stable)");

  auto* cayley = app.add_subcommand("cayley", "Operation table as CSV or DOT");
  add_simplex(cayley);
  cayley->add_option("--op", op, "add or mul");
  cayley->add_option("--format", table_format, "csv or dot")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? 0 : cli::usage;
  }

  if (*enumerate) return cli::cmd_enumerate(simplex, list_format, count_only, std::cout, std::cerr);
  if (*classify) return cli::cmd_classify(simplex, std::cout, std::cerr);
  if (*verify) return cli::cmd_verify(suite, max_n, seed, timing, std::cout, std::cerr);
  return cli::cmd_cayley(simplex, op, table_format, std::cout, std::cerr);
}
