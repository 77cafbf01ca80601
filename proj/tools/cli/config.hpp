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

#ifndef RELENT_TOOLS_CLI_CONFIG_HPP
#define RELENT_TOOLS_CLI_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relent::cli {

/// Malformed or out-of-range configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

/// Sample family used by conjecture-scan.
enum class Ensemble { Random, RandomNpt, Werner, Separable };

struct SweepConfig {
  double w_over_2m = 0.1;
  double alpha_min = 0.0;
  double alpha_max = 10.0;
  int alpha_steps = 201;
  std::vector<double> F_values;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::Csv;

  double strong_tolerance = 1e-9;
  int ensemble_size = 1000;
  Ensemble ensemble = Ensemble::Random;
  std::vector<double> scan_n_grid{1.0, 0.995};
  double variation_threshold = 1e-8;

  /// w/m >= 1: outside the localized single-particle regime.
  bool localization_warning() const { return 2.0 * w_over_2m >= 1.0; }

  /// alpha_steps points spanning [alpha_min, alpha_max] inclusive.
  std::vector<double> alpha_grid() const;
};

/// Parses a JSON config document. Unknown keys, wrong types and out-of-range
/// values raise ConfigError naming the field and its line in `text`.
SweepConfig parse_config(std::string_view text, std::string_view source_name);

/// Field-level checks shared by every command (w > 0, F in [0, 1], ...).
void check_fields(const SweepConfig& config);

/// Additionally requires alpha_min < alpha_max and alpha_steps >= 2.
void check_sweep_grid(const SweepConfig& config);

std::string_view to_string(OutputFormat format);
std::string_view to_string(Ensemble ensemble);
OutputFormat parse_output_format(std::string_view text);
Ensemble parse_ensemble(std::string_view text);

}  // namespace relent::cli

#endif  // RELENT_TOOLS_CLI_CONFIG_HPP
