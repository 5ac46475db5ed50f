#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "holo/commands.hpp"
#include "holo/config.hpp"
#include "holo/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Full verification sweep: tensor tables, holonomy, property checks"};
  std::string format, out, config_path;
  long long seed = 0;
  bool serial = false;

  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--seed", seed, "seed for sampled points and loop families");
  app.add_option("--format", format, "json | text");
  app.add_option("--out", out, "write the report to PATH instead of stdout");
  app.add_flag("--serial", serial, "disable OpenMP transport batching");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    holo::RunConfig cfg;
    if (!config_path.empty()) holo::apply_config_file(cfg, config_path);
    holo::apply_env(cfg);
    if (app.count("--seed")) cfg.seed = static_cast<std::uint64_t>(seed);
    if (app.count("--format")) cfg.format = format;
    if (app.count("--out")) cfg.out_path = out;
    if (serial) cfg.use_openmp = false;

    const holo::VerificationReport rep = holo::cmd_verify_all(cfg);
    holo::write_report(rep, cfg.format, cfg.out_path);
    return holo::report_exit_code(rep);
  } catch (const holo::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
