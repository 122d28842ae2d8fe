// Command-line front end: graded dimensions of the Hochschild homology and
// cohomology of S(V)#G for a finite matrix group G, with duality and
// brute-force verification subcommands.

#include <iostream>

#include <CLI11.hpp>

#include "smashhom/report.hpp"

using namespace smashhom;

int main(int argc, char** argv) {
  CLI::App app{"graded Hochschild (co)homology of S(V)#G"};
  app.require_subcommand(1);

  RunOptions opts;

  auto add_common = [&](CLI::App* cmd, bool needs_group) {
    if (needs_group)
      cmd->add_option("--group", opts.group, "catalog:NAME or a group file path")->required();
    cmd->add_option("--trunc", opts.trunc, "internal-degree truncation")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--double", opts.use_double, "act on V + V* (block-doubled generators)");
    cmd->add_option("--format", opts.format, "table or machine")
        ->check(CLI::IsMember({"table", "machine"}));
    cmd->add_option("--jobs", opts.jobs, "worker threads for per-class work")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* homology = app.add_subcommand("homology", "Poincare series of H_n(S(V)#G)");
  CLI::App* cohomology = app.add_subcommand("cohomology", "Poincare series of H^n(S(V)#G)");
  CLI::App* twisted = app.add_subcommand("twisted-homology", "homology with the det^-1 twist");
  for (CLI::App* cmd : {homology, cohomology, twisted}) {
    add_common(cmd, true);
    cmd->add_flag("--per-class", opts.per_class, "include the per-conjugacy-class breakdown");
  }

  CLI::App* duality =
      app.add_subcommand("duality", "check cohomology against shifted (twisted) homology");
  add_common(duality, true);

  CLI::App* oracle = app.add_subcommand(
      "oracle-check", "compare closed-form series against the truncated Koszul complexes");
  add_common(oracle, true);

  CLI::App* bar =
      app.add_subcommand("bar-check", "compare the normalized bar complex against the class sum");
  add_common(bar, true);
  bar->add_option("--nmax", opts.bar_nmax, "largest homological degree");
  bar->add_option("--dmax", opts.bar_dmax, "largest internal degree");

  CLI::App* cat = app.add_subcommand("catalog", "list the built-in groups");
  cat->add_option("--format", opts.format, "table or machine")
      ->check(CLI::IsMember({"table", "machine"}));

  CLI11_PARSE(app, argc, argv);
  opts.command = app.get_subcommands().front()->get_name();

  try {
    RunResult result = run(opts);
    if (opts.format == "machine")
      std::cout << result.report.dump(2) << "\n";
    else
      std::cout << render_table(result.report);
    return result.exit_code;
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const OrderExceededError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
