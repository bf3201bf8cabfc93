#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spingraph/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"quantum spin systems on moduli spaces of graph connections"};
  app.require_subcommand(1);

  spingraph::CommandOptions options;

  struct VerbSpec {
    const char* name;
    const char* help;
  };
  const std::vector<VerbSpec> verbs = {
      {"sectors", "enumerate sectors with dimensions and Casimir labels"},
      {"check", "equivariance, Casimir, and orthogonality suite"},
      {"superint", "irreducibility certificates per sector"},
      {"trace", "evaluate trace-chain functions on a grid or given points"},
      {"spherical", "evaluate spherical-chain functions on a grid or given points"},
      {"eval", "evaluate sector basis functions on a grid or given points"},
  };

  for (const auto& verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb.name, verb.help);
    sub->add_option("--spec", options.spec_path, "path to the run-spec file")
        ->required();
    sub->add_option("--seed", options.seed, "random seed override");
    sub->add_option("--samples", options.samples, "sample count override");
    sub->add_option("--max-spin", options.max_spin,
                    "sector cap override, e.g. \"3/2\"");
    sub->add_option("--degree-cap", options.degree_cap,
                    "generator degree cap override");
    sub->add_option("--quadrature-order", options.quadrature_order,
                    "Haar quadrature order override");
    sub->add_option("--out", options.out_path, "write the report to this file");
    sub->add_option("--format", options.format, "table or json-like")
        ->default_str("table");
    if (std::string(verb.name) == "check") {
      sub->add_flag("--corrupt", options.corrupt,
                    "negative-control fixture: perturb one coefficient");
    }
    if (std::string(verb.name) == "superint") {
      sub->add_flag("--leg-casimirs-only", options.leg_casimirs_only,
                    "negative-control fixture: truncated generator set");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  return spingraph::run_command(app.get_subcommands().front()->get_name(), options);
}
