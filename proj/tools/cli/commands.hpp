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

#ifndef RELENT_TOOLS_CLI_COMMANDS_HPP
#define RELENT_TOOLS_CLI_COMMANDS_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cli/config.hpp"

namespace relent::cli {

struct WernerColumn {
  double F = 0.0;
  double x2 = 0.0;          ///< closed-form PT eigenvalue
  double negativity = 0.0;  ///< from the numeric PT spectrum
  bool distillable = false;
};

struct SweepRow {
  double alpha = 0.0;
  double n_z = 0.0;
  double threshold_N_z = 0.0;
  std::vector<WernerColumn> per_F;
};

/// Rows in ascending alpha.
std::vector<SweepRow> sweep_rows(const SweepConfig& config);

/// %.17g.
std::string format_real(double x);

/// Shortest round-trip decimal, used in column labels.
std::string format_label(double x);

void cmd_sweep(const SweepConfig& config, std::ostream& out);
void cmd_classify(const SweepConfig& config, std::ostream& out);
void cmd_conjecture_scan(const SweepConfig& config, std::ostream& out);
void cmd_validate(const SweepConfig& config, std::ostream& out);

/// Compares two rendered outputs: numeric tokens must agree to
/// `tolerance * max(1, |golden|)`, everything else byte-for-byte. On mismatch
/// `reason` describes the first difference.
bool outputs_match(std::string_view produced, std::string_view golden, double tolerance, std::string* reason);

}  // namespace relent::cli

#endif  // RELENT_TOOLS_CLI_COMMANDS_HPP
