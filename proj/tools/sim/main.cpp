// sim: command-line driver for coupled-rotor simulations.
//
//   sim run --config <path> [--out <dir>]
//   sim preset <name> [--out <dir>]
//   sim sweep --spec <path>
//   sim plot --csv <path>... --out <dir>
//
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 I/O failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dipolar/config.hpp"
#include "dipolar/csv.hpp"
#include "dipolar/errors.hpp"
#include "dipolar/presets.hpp"
#include "dipolar/svg.hpp"
#include "dipolar/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kNumericalError = 3;
constexpr int kIoError = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dipolar::IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report(const dipolar::RunOutcome& o) {
  std::cout << o.name << ": " << o.rows << " rows -> " << o.csv.string() << "\n";
}

int cmd_run(const std::string& config_path, const std::string& out) {
  dipolar::RunConfig config = dipolar::parse_config(read_file(config_path));
  if (!out.empty()) config.output.out_dir = out;
  report(dipolar::run_to_directory(config, config.output.out_dir, "run"));
  return kOk;
}

int cmd_preset(const std::string& name, const std::string& out) {
  const auto runs = dipolar::preset(name);
  const std::string dir = out.empty() ? "out" : out;
  for (auto run : runs) {
    run.config.output.out_dir = dir;
    report(dipolar::run_to_directory(run.config, dir, run.name));
  }
  return kOk;
}

int cmd_sweep(const std::string& spec_path) {
  const auto spec = dipolar::parse_sweep_spec(read_file(spec_path));
  const auto results = dipolar::run_sweep(spec);
  int failures = 0;
  int worst = kOk;
  for (const auto& r : results) {
    if (r.ok) continue;
    ++failures;
    worst = std::max(worst, r.exit_code);
    std::cerr << "point " << r.point.index << " failed: " << r.error << "\n";
  }
  std::cout << results.size() - failures << "/" << results.size() << " points ok; manifest in "
            << (std::filesystem::path(spec.out_dir) / "manifest.json").string() << "\n";
  return failures == 0 ? kOk : worst;
}

int cmd_plot(const std::vector<std::string>& csvs, const std::string& out) {
  for (const auto& csv : csvs) std::cout << dipolar::plot_csv(csv, out).string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two dipole-coupled rigid rotors driven by Gaussian half-cycle pulses"};
  app.require_subcommand(1);

  std::string config_path, out_dir, preset_name, spec_path;
  std::vector<std::string> csvs;

  auto* run = app.add_subcommand("run", "Run one configuration");
  run->add_option("--config", config_path, "JSON configuration")->required();
  run->add_option("--out", out_dir, "Output directory (overrides output.out_dir)");

  auto* pre = app.add_subcommand("preset", "Run a named preset");
  pre->add_option("name", preset_name, "fig1a fig1b fig2a fig2b fig3a fig3b fig4")->required();
  pre->add_option("--out", out_dir, "Output directory");

  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--spec", spec_path, "JSON sweep specification")->required();

  auto* plot = app.add_subcommand("plot", "Render CSV time series as SVG");
  plot->add_option("--csv", csvs, "CSV files")->required();
  plot->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*run) return cmd_run(config_path, out_dir);
    if (*pre) return cmd_preset(preset_name, out_dir);
    if (*sweep) return cmd_sweep(spec_path);
    if (*plot) return cmd_plot(csvs, out_dir);
  } catch (const dipolar::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const dipolar::QueryError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const dipolar::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalError;
  } catch (const dipolar::IoError& e) {
    std::cerr << "i/o failure: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalError;
  }
  return kOk;
}
