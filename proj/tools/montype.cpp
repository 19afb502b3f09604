// Command-line front end for the montype library.

#include <iostream>

#include <CLI11.hpp>

#include "montype/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Classify squarefree monomial ideals and test the linear-type property of their Rees algebras"};
  app.require_subcommand(1);

  montype::RunConfig config;
  int max_degree = 0;
  std::size_t max_length = 0;
  bool special = false;
  bool berge = false;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-terms", config.budget.max_terms, "Largest polynomial or basis tolerated")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-seconds", config.budget.max_seconds, "Time budget per Gröbner computation")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", config.threads, "Worker threads for reductions")->check(CLI::PositiveNumber);
  };

  auto* classify = app.add_subcommand("classify", "Leaves, forests, cycles, Villarreal class, patches");
  classify->add_option("file", config.input, "Ideal or complex file")->required()->check(CLI::ExistingFile);
  classify->add_flag("--json", config.json, "JSON output");

  auto* linear = app.add_subcommand("linear-type", "Bounded linear-type certificate");
  linear->add_option("file", config.input, "Ideal or complex file")->required()->check(CLI::ExistingFile);
  linear->add_option("--max-degree,-K", max_degree, "Largest T-degree of Taylor relations to reduce");
  linear->add_flag("--json", config.json, "JSON output");
  add_budget(linear);

  auto* cycles = app.add_subcommand("cycles", "Berge and special cycles");
  cycles->add_option("file", config.input, "Ideal or complex file")->required()->check(CLI::ExistingFile);
  auto* special_flag = cycles->add_flag("--special", special, "List special cycles (default)");
  cycles->add_flag("--berge", berge, "List Berge cycles")->excludes(special_flag);
  cycles->add_option("--max-length", max_length, "Longest cycle to list (default: number of facets)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));
  cycles->add_flag("--json", config.json, "JSON output");

  auto* rees = app.add_subcommand("rees", "Linear relations and the truncated Gröbner basis of J_1");
  rees->add_option("file", config.input, "Ideal or complex file")->required()->check(CLI::ExistingFile);
  rees->add_option("--max-degree,-K", max_degree, "Basis is computed up to T-degree K + 1");
  rees->add_flag("--emit-groebner", config.emit_groebner, "Print the basis");
  rees->add_flag("--json", config.json, "JSON output");
  add_budget(rees);

  auto* conjecture = app.add_subcommand("conjecture", "Random patched linear cycles against the parity prediction");
  conjecture->add_option("--length", config.length, "Cycle length l")->required()->check(CLI::Range(4, 64));
  conjecture->add_option("--patches", config.patches, "Number of patches q")->required();
  conjecture->add_option("--trials", config.trials, "Random instances")->required()->check(CLI::PositiveNumber);
  conjecture->add_option("--seed", config.seed, "Seed")->required();
  conjecture->add_option("--max-degree,-K", max_degree, "Degree bound (default from l + q)");
  conjecture->add_flag("--json", config.json, "JSON output");
  add_budget(conjecture);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : montype::ExitPrecondition;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (max_degree != 0) config.max_degree = max_degree;
  if (max_length != 0) config.max_length = max_length;
  config.mode = berge ? montype::CycleMode::Berge : montype::CycleMode::Special;
  return montype::run(config, std::cout, std::cerr);
}
