// Copyright 2026 The relent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// relent: boosted two-spin entanglement and distillability from the command
// line. Exit codes: 0 success, 1 --tolerance-compare mismatch, 2 config
// error, 3 internal numerical failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "relent/errors.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr double kCompareTolerance = 1e-12;

struct Overrides {
  std::string config_path;
  std::optional<double> w_over_2m;
  std::optional<double> alpha_min;
  std::optional<double> alpha_max;
  std::optional<int> alpha_steps;
  std::vector<double> F_values;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<int> ensemble_size;
  std::optional<std::string> ensemble;
  std::optional<double> strong_tolerance;
  std::string compare_path;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

relent::cli::SweepConfig load_config(const Overrides& o) {
  using relent::cli::ConfigError;
  relent::cli::SweepConfig cfg;
  if (!o.config_path.empty()) {
    std::string text;
    if (o.config_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream file(o.config_path, std::ios::binary);
      if (!file) throw ConfigError(o.config_path + ": cannot open config file");
      text = read_all(file);
    }
    cfg = relent::cli::parse_config(text, o.config_path == "-" ? "<stdin>" : o.config_path);
  }
  if (o.w_over_2m) cfg.w_over_2m = *o.w_over_2m;
  if (o.alpha_min) cfg.alpha_min = *o.alpha_min;
  if (o.alpha_max) cfg.alpha_max = *o.alpha_max;
  if (o.alpha_steps) cfg.alpha_steps = *o.alpha_steps;
  if (!o.F_values.empty()) cfg.F_values = o.F_values;
  if (o.seed) cfg.seed = *o.seed;
  if (o.format) cfg.output_format = relent::cli::parse_output_format(*o.format);
  if (o.ensemble_size) cfg.ensemble_size = *o.ensemble_size;
  if (o.ensemble) cfg.ensemble = relent::cli::parse_ensemble(*o.ensemble);
  if (o.strong_tolerance) cfg.strong_tolerance = *o.strong_tolerance;
  try {
    relent::cli::check_fields(cfg);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("after applying flags: ") + e.what());
  }
  return cfg;
}

void add_common_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "JSON config file ('-' for standard input)");
  cmd->add_option("--w-over-2m", o.w_over_2m, "Momentum width over twice the mass, w/2m");
  cmd->add_option("--alpha-min", o.alpha_min, "Smallest rapidity");
  cmd->add_option("--alpha-max", o.alpha_max, "Largest rapidity");
  cmd->add_option("--alpha-steps", o.alpha_steps, "Rapidity grid points, endpoints included");
  cmd->add_option("--F", o.F_values, "Werner fidelity (repeatable)")->take_all();
  cmd->add_option("--seed", o.seed, "Seed for random ensembles");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--tolerance-compare", o.compare_path,
                  "Compare the output against a golden file, numbers to 1e-12 relative");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement and distillability of Werner-type two-spin states under Lorentz boosts"};
  app.require_subcommand(1);

  Overrides o;
  auto* sweep = app.add_subcommand("sweep", "Threshold N'_z and Werner PT data across a rapidity grid (CSV/JSON)");
  auto* classify = app.add_subcommand("classify", "WIE/WID/SIE/SID classification of Werner states over the grid");
  auto* scan = app.add_subcommand("conjecture-scan", "Negativity variation scan over a seeded ensemble");
  auto* validate = app.add_subcommand("validate", "Echo derived frame quantities and physical-validity warnings");
  for (auto* cmd : {sweep, classify, scan, validate}) add_common_options(cmd, o);
  classify->add_option("--strong-tolerance", o.strong_tolerance, "Absolute negativity spread counted as constant");
  scan->add_option("--ensemble", o.ensemble, "Sample family")
      ->check(CLI::IsMember({"random", "random-npt", "werner", "separable"}));
  scan->add_option("--ensemble-size", o.ensemble_size, "Number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const relent::cli::SweepConfig cfg = load_config(o);
    if (cfg.localization_warning() && !validate->parsed())
      std::cerr << "warning: w/m >= 1; the first-order spin model is outside its physical regime\n";

    std::ostringstream out;
    if (sweep->parsed()) relent::cli::cmd_sweep(cfg, out);
    if (classify->parsed()) relent::cli::cmd_classify(cfg, out);
    if (scan->parsed()) relent::cli::cmd_conjecture_scan(cfg, out);
    if (validate->parsed()) relent::cli::cmd_validate(cfg, out);
    const std::string rendered = out.str();
    std::cout << rendered << std::flush;

    if (!o.compare_path.empty()) {
      std::ifstream golden_file(o.compare_path, std::ios::binary);
      if (!golden_file) throw relent::cli::ConfigError(o.compare_path + ": cannot open golden file");
      std::string why;
      if (!relent::cli::outputs_match(rendered, read_all(golden_file), kCompareTolerance, &why)) {
        std::cerr << "tolerance-compare: mismatch against " << o.compare_path << ": " << why << '\n';
        return kExitMismatch;
      }
    }
    return 0;
  } catch (const relent::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const relent::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
