#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seczeros/config.hpp"
#include "seczeros/errors.hpp"
#include "seczeros/runner.hpp"

namespace {

struct CliOverrides {
  std::string config_file;
  std::string family;
  std::vector<std::string> params;
  std::string nmax;
  std::string mode;
  std::string precision;
  std::string out;
  std::string workers;
};

void attach_common_flags(CLI::App* cmd, CliOverrides& ov) {
  cmd->add_option("--config", ov.config_file, "scenario file (INI sections)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--family", ov.family, "coefficient family name");
  cmd->add_option("--param", ov.params, "family parameter NAME=VALUE (repeatable)");
  cmd->add_option("--nmax", ov.nmax, "cap for the default n grid");
  cmd->add_option("--mode", ov.mode, "normalization: MAX_GAUGE | LAST_COEFF | NONE");
  cmd->add_option("--precision", ov.precision, "working precision in bits");
  cmd->add_option("--out", ov.out, "output directory");
  cmd->add_option("--workers", ov.workers, "worker threads (0 = auto)");
}

sz::ScenarioConfig resolve_config(const CliOverrides& ov) {
  sz::ScenarioConfig cfg;
  if (!ov.config_file.empty()) cfg = sz::parse_config_file(ov.config_file);
  const char* where = "command line";
  if (!ov.family.empty()) sz::apply_config_key(cfg, "sequence", "family", ov.family, where);
  for (const std::string& p : ov.params) {
    sz::apply_config_key(cfg, "sequence", "param", p, where);
  }
  if (!ov.nmax.empty()) sz::apply_config_key(cfg, "grid", "nmax", ov.nmax, where);
  if (!ov.mode.empty()) sz::apply_config_key(cfg, "solver", "mode", ov.mode, where);
  if (!ov.precision.empty()) {
    sz::apply_config_key(cfg, "solver", "precision", ov.precision, where);
  }
  if (!ov.out.empty()) sz::apply_config_key(cfg, "run", "out", ov.out, where);
  if (!ov.workers.empty()) sz::apply_config_key(cfg, "run", "workers", ov.workers, where);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"section-zero diagnostics for power-series coefficient sequences"};
  app.require_subcommand(1);

  CliOverrides ov;
  std::function<void(const sz::ScenarioConfig&)> action;

  CLI::App* gauge = app.add_subcommand("gauge", "gauge profile and Ostrowski gap flags");
  attach_common_flags(gauge, ov);
  gauge->callback([&]() { action = sz::cmd_gauge; });

  CLI::App* zeros = app.add_subcommand("zeros", "section zeros and equidistribution measures");
  attach_common_flags(zeros, ov);
  zeros->callback([&]() { action = sz::cmd_zeros; });

  CLI::App* bounds = app.add_subcommand("bounds", "inclusion/exclusion radii for section zeros");
  attach_common_flags(bounds, ov);
  bounds->callback([&]() { action = sz::cmd_bounds; });

  CLI::App* report = app.add_subcommand("report", "manifest over an existing output directory");
  attach_common_flags(report, ov);
  report->callback([&]() { action = sz::cmd_report; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action(resolve_config(ov));
  } catch (const sz::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const sz::DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const sz::NumericError& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const sz::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
