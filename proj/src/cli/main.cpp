#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cgme/cli.hpp"
#include "cgme/errors.hpp"

namespace cgme {

int run_cli(int argc, char** argv) {
  CLI::App app{"coarse-grained master-equation toolkit: two two-level atoms in a "
               "thermal scalar-field bath"};
  app.require_subcommand(1);

  std::string config_path, out_path, criterion = "full", suite = "all", registry_path;
  std::vector<std::string> axes;
  bool boundary = false;

  const auto criterion_check =
      CLI::IsMember({"full", "highT", "equal", "smallL", "largeDt"});

  CLI::App* k = app.add_subcommand("kossakowski", "compute the 6x6 Kossakowski matrix");
  k->add_option("--config", config_path, "run configuration JSON")->required();
  k->add_option("--out", out_path, "CSV output (i,j,re,im)");

  CLI::App* e = app.add_subcommand("evolve", "integrate the master equation");
  e->add_option("--config", config_path, "run configuration JSON")->required();
  e->add_option("--out", out_path, "trajectory CSV output")->required();

  CLI::App* n = app.add_subcommand("entangle", "evaluate an entanglement-generation criterion");
  n->add_option("--config", config_path, "run configuration JSON")->required();
  n->add_option("--criterion", criterion, "full | highT | equal | smallL | largeDt")
      ->check(criterion_check);
  n->add_option("--out", out_path, "single-row CSV report");

  CLI::App* s = app.add_subcommand("sweep", "evaluate a criterion over a 1-2 axis grid");
  s->add_option("--config", config_path, "run configuration JSON")->required();
  s->add_option("--axis", axes, "axis spec name=from:to:points (repeatable, max 2)")
      ->required();
  s->add_option("--criterion", criterion, "full | highT | equal | smallL | largeDt")
      ->check(criterion_check);
  s->add_option("--out", out_path, "grid CSV output")->required();
  s->add_flag("--boundary", boundary, "bisect margin sign changes (1 axis only)");

  CLI::App* v = app.add_subcommand("verify", "compare closed forms against the quadrature oracle");
  v->add_option("--suite", suite, "appendix | kossakowski | hamiltonian | all")
      ->check(CLI::IsMember({"appendix", "kossakowski", "hamiltonian", "all"}));
  v->add_option("--registry", registry_path, "discrepancy registry JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (k->parsed()) return cmd_kossakowski(load_run_config(config_path), out_path);
    if (e->parsed()) return cmd_evolve(load_run_config(config_path), out_path);
    if (n->parsed())
      return cmd_entangle(load_run_config(config_path), criterion, out_path);
    if (s->parsed())
      return cmd_sweep(load_run_config(config_path), axes, criterion, out_path, boundary);
    if (v->parsed()) return cmd_verify(suite, registry_path);
  } catch (const config_error& err) {
    std::fprintf(stderr, "error (configuration): %s\n", err.what());
    return 2;
  } catch (const numerics_error& err) {
    std::fprintf(stderr, "error (numerics): %s\n", err.what());
    return 3;
  } catch (const discrepancy_error& err) {
    std::fprintf(stderr, "error (discrepancy): %s\n", err.what());
    return 4;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
  return 0;
}

}  // namespace cgme

int main(int argc, char** argv) { return cgme::run_cli(argc, argv); }
