#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "holo/commands.hpp"
#include "holo/config.hpp"
#include "holo/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Conformal tractor holonomy estimation from parallel transport"};
  std::string manifold, point, format, out, config_path;
  long long seed = 0;
  int loops = 0, steps = 0;
  bool serial = false;

  app.add_option("--manifold", manifold, "bivariate | independence");
  app.add_option("--point", point, "base point, comma-separated source-chart coordinates");
  app.add_option("--seed", seed, "seed for the loop family");
  app.add_option("--loops", loops, "number of random polyline loops");
  app.add_option("--steps", steps, "RK4 steps per unit of arc length");
  app.add_option("--format", format, "json | text");
  app.add_option("--out", out, "write the report to PATH instead of stdout");
  app.add_option("--config", config_path, "key=value configuration file");
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
    if (app.count("--manifold")) cfg.manifold = manifold;
    if (app.count("--point")) cfg.point = holo::parse_point_list(point);
    if (app.count("--seed")) cfg.seed = static_cast<std::uint64_t>(seed);
    if (app.count("--loops")) cfg.loops = loops;
    if (app.count("--steps")) cfg.steps_per_unit = steps;
    if (app.count("--format")) cfg.format = format;
    if (app.count("--out")) cfg.out_path = out;
    if (serial) cfg.use_openmp = false;

    const holo::VerificationReport rep = holo::cmd_holonomy(cfg);
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
