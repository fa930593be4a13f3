#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using whframes::cli::RunConfig;

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Weyl-Heisenberg frames: SIC-POVM and MUB construction and exact verification", "whframes"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read key=value defaults from a file (flags override)");

  app.add_option("-d,--dimension", cfg.d, "Dimension d (default depends on the command)");
  app.add_option("--seed", cfg.seed, "Seed for randomized commands")->default_str("0");
  app.add_option("--restarts", cfg.restarts, "Random restarts (sic search: 20, mub dim4: 200, mub solve: 500)");
  app.add_option("--tolerance", cfg.tolerance, "Float tolerance (default 1e-10; sic orbits: 1e-6 class separation)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}))->default_str("json");
  app.add_option("--output", cfg.output_path, "Write the output here instead of stdout");

  auto* sic = app.add_subcommand("sic", "SIC-POVM commands")->require_subcommand(1)->fallthrough();
  auto* mub = app.add_subcommand("mub", "Mutually unbiased bases commands")->require_subcommand(1)->fallthrough();

  auto* verify = sic->add_subcommand("verify", "Verify the SIC property of a fiducial's Heisenberg orbit")->fallthrough();
  verify->add_option("--fiducial", cfg.fiducial, "builtin:grassl6 or a JSON file")->default_str("builtin:grassl6");
  auto* exact = verify->add_flag("--exact", cfg.exact, "Exact arithmetic (default for exact fiducials)");
  verify->add_flag("--float", cfg.float_mode, "Floating-point check at --tolerance")->excludes(exact);

  auto* search = sic->add_subcommand("search", "Numerical fiducial search by frame-potential descent")->fallthrough();
  search->add_flag("--zauner", cfg.zauner, "Restrict to eigenspaces of the order-3 Clifford unitary");

  auto* orbits = sic->add_subcommand("orbits", "Count Clifford orbits of SICs (d = 6)")->fallthrough();
  orbits->add_flag("--with-conjugates", cfg.with_conjugates, "Also count complex-conjugate classes");
  orbits->add_option("--fiducial", cfg.fiducial, "builtin:grassl6 or a JSON file")->default_str("builtin:grassl6");

  auto* analyze = mub->add_subcommand("analyze", "Dimension-6 unbiased-vector, basis and maximality analysis")->fallthrough();
  auto* triple = mub->add_subcommand("triple", "Eigenbases of X, Z and XZ^k")->fallthrough();
  triple->add_option("-k", cfg.k, "Exponent k with gcd(k, d) = 1")->default_str("1");
  auto* texact = triple->add_flag("--exact", cfg.exact, "Exact verification (default)");
  triple->add_flag("--float", cfg.float_mode, "Floating-point verification at --tolerance")->excludes(texact);

  auto* dim4 = mub->add_subcommand("dim4", "Dimension-4 family {B_Z, B_X, B_3(a,b)}")->fallthrough();
  dim4->add_option("--a", cfg.a, "Parameter a in [0, pi)")->default_str("0");
  dim4->add_option("--b", cfg.b, "Parameter b in [0, pi)")->default_str("0");

  auto* solve = mub->add_subcommand("solve", "Numerically solve for vectors unbiased to B_X and B_Z")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return whframes::cli::kUsageError;
  }

  const std::pair<CLI::App*, int (*)(const RunConfig&)> table[] = {
      {verify, whframes::cli::cmd_sic_verify},   {search, whframes::cli::cmd_sic_search},
      {orbits, whframes::cli::cmd_sic_orbits},   {analyze, whframes::cli::cmd_mub_analyze},
      {triple, whframes::cli::cmd_mub_triple},   {dim4, whframes::cli::cmd_mub_dim4},
      {solve, whframes::cli::cmd_mub_solve}};
  for (const auto& [sub, fn] : table) {
    if (!sub->parsed()) continue;
    cfg.command = sub->get_parent()->get_name();
    cfg.subcommand = sub->get_name();
    return fn(cfg);
  }
  return whframes::cli::kUsageError;
}
