// htlab command line: run a named study and emit its report.
//
//   htlab identity  [--config PATH] [--seed N] [--out PATH] [--format csv|json] [--plots]
//   htlab truncnorm [...]
//   htlab atoms     [...]
//   htlab bhtconv   [...]
//
// Exit code is 0 iff every executed identity-grade check passed.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "htlab/htlab.hpp"

namespace {

struct CliFlags {
  std::string config_path;
  std::string out;
  std::string format;
  bool plots = false;
  bool seed_set = false;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CliFlags& fl) {
  cmd->add_option("--config", fl.config_path, "flat key = value configuration file");
  cmd->add_option("--seed", fl.seed, "override the RNG seed")->each([&](const std::string&) {
    fl.seed_set = true;
  });
  cmd->add_option("--out", fl.out, "report output path (default: stdout, CSV)");
  cmd->add_option("--format", fl.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--plots", fl.plots, "emit SVG plots next to the report");
}

int run(const std::string& scenario, const CliFlags& fl) {
  htlab::ExperimentConfig cfg;
  if (!fl.config_path.empty()) cfg = htlab::load_config(fl.config_path);
  cfg.scenario = scenario;
  if (fl.seed_set) cfg.seed = fl.seed;
  if (!fl.out.empty()) cfg.out = fl.out;
  if (!fl.format.empty()) cfg.format = fl.format;
  if (fl.plots) cfg.plots = true;

  const htlab::Report rep = htlab::run_scenario(cfg);

  if (cfg.out.empty()) {
    if (cfg.format == "json")
      std::cout << htlab::report_to_json(rep).dump(2) << '\n';
    else
      htlab::emit_csv(rep, std::cout);
    if (cfg.plots)
      std::cerr << "htlab: --plots requires --out to name the report files\n";
  } else {
    for (const std::string& p : htlab::emit(rep, cfg.format, cfg.out, cfg.plots))
      std::cerr << "wrote " << p << '\n';
  }
  return rep.all_checks_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical studies of truncated Hankel operators and bilinear Hilbert transforms"};
  app.require_subcommand(1);

  CliFlags fl;
  std::string chosen;
  for (const char* name : {"identity", "truncnorm", "atoms", "bhtconv"}) {
    CLI::App* cmd = app.add_subcommand(name, "run the '" + std::string(name) + "' study");
    add_common(cmd, fl);
    cmd->callback([&chosen, name] { chosen = name; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return run(chosen, fl);
  } catch (const std::exception& e) {
    std::cerr << "htlab: " << e.what() << '\n';
    return 2;
  }
}
