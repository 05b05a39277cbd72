#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fgs/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Free factors around a finitely generated subgroup of a free group"};
  app.require_subcommand(1);

  fgs::cli::RunConfig config;
  std::size_t budget = 0;
  std::size_t cut = 0;

  const std::map<std::string, std::string> about{
      {"graph", "Whitehead graph of the words"},
      {"reduce", "cut-vertex reduction trace"},
      {"closure", "basis of the smallest free factor containing the words"},
      {"subbasis", "decide whether the words extend to a basis"},
      {"core", "Stallings core graph"},
      {"boundary", "apply one cut to the core graph"},
      {"explore", "breadth-first exploration of cut images"},
      {"sandwich", "upper and lower free-factor layers"},
      {"cuts", "list the cuts for this rank"},
  };

  for (const auto& name : fgs::cli::commands()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    sub->add_option("--gens,-g", config.generators, "generator names, e.g. xy")->required();
    if (name != "cuts") {
      sub->add_option("--words,-w", config.words, "comma-separated words or @file")->allow_extra_args(false);
    }
    sub->add_option("--output,-o", config.output, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    CLI::Option* budget_opt = nullptr;
    CLI::Option* cut_opt = nullptr;
    if (name == "explore" || name == "sandwich") {
      budget_opt = sub->add_option("--budget", budget, "maximum number of exploration nodes");
      sub->add_flag("--force-rank", config.force_rank, "allow rank above 5");
    }
    if (name == "boundary") {
      cut_opt = sub->add_option("--cut", cut, "index into the cuts listing")->required();
      sub->add_flag("--explain", config.explain, "dump the intermediate graphs");
    }
    sub->add_flag("--oracle", config.oracle, "also run the brute-force cross-check");
    sub->callback([&config, name, budget_opt, cut_opt, &budget, &cut] {
      config.command = name;
      if (budget_opt && budget_opt->count()) config.node_budget = budget;
      if (cut_opt && cut_opt->count()) config.cut_index = cut;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fgs::cli::kInputError;
  }

  const auto result = fgs::cli::run(config);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
