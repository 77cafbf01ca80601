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

#include "cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <sstream>

namespace relent::cli {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

class FieldReader {
 public:
  FieldReader(std::string_view text, std::string_view source) : text_(text), source_(source) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    std::ostringstream msg;
    msg << source_;
    const std::string quoted = "\"" + field + "\"";
    if (const auto pos = text_.find(quoted); pos != std::string_view::npos) msg << ":" << line_of_offset(text_, pos);
    msg << ": field '" << field << "': " << what;
    throw ConfigError(msg.str());
  }

  double real(const json& value, const std::string& field) const {
    if (!value.is_number()) fail(field, "expected a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) fail(field, "must be finite");
    return x;
  }

  std::int64_t integer(const json& value, const std::string& field) const {
    if (!value.is_number_integer()) fail(field, "expected an integer");
    return value.get<std::int64_t>();
  }

  std::vector<double> reals(const json& value, const std::string& field) const {
    if (!value.is_array()) fail(field, "expected an array of numbers");
    std::vector<double> out;
    for (const json& item : value) out.push_back(real(item, field));
    return out;
  }

  std::string string(const json& value, const std::string& field) const {
    if (!value.is_string()) fail(field, "expected a string");
    return value.get<std::string>();
  }

 private:
  std::string_view text_;
  std::string_view source_;
};

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ConfigError("field '" + field + "': " + what);
}

}  // namespace

std::vector<double> SweepConfig::alpha_grid() const {
  std::vector<double> grid;
  if (alpha_steps <= 1) return {alpha_min};
  grid.reserve(static_cast<std::size_t>(alpha_steps));
  const double span = alpha_max - alpha_min;
  for (int k = 0; k < alpha_steps; ++k)
    grid.push_back(k == alpha_steps - 1 ? alpha_max : alpha_min + span * k / (alpha_steps - 1));
  return grid;
}

std::string_view to_string(OutputFormat format) { return format == OutputFormat::Csv ? "csv" : "json"; }

std::string_view to_string(Ensemble ensemble) {
  switch (ensemble) {
    case Ensemble::Random: return "random";
    case Ensemble::RandomNpt: return "random-npt";
    case Ensemble::Werner: return "werner";
    case Ensemble::Separable: return "separable";
  }
  return "random";
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

Ensemble parse_ensemble(std::string_view text) {
  for (Ensemble e : {Ensemble::Random, Ensemble::RandomNpt, Ensemble::Werner, Ensemble::Separable})
    if (to_string(e) == text) return e;
  throw ConfigError("unknown ensemble '" + std::string(text) + "' (expected random, random-npt, werner or separable)");
}

SweepConfig parse_config(std::string_view text, std::string_view source_name) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::ostringstream msg;
    msg << source_name << ":" << line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1) << ": malformed JSON: " << e.what();
    throw ConfigError(msg.str());
  }
  if (!doc.is_object()) throw ConfigError(std::string(source_name) + ": config must be a JSON object");

  const FieldReader read(text, source_name);
  SweepConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "w_over_2m") {
      cfg.w_over_2m = read.real(value, key);
    } else if (key == "alpha_min") {
      cfg.alpha_min = read.real(value, key);
    } else if (key == "alpha_max") {
      cfg.alpha_max = read.real(value, key);
    } else if (key == "alpha_steps") {
      const auto steps = read.integer(value, key);
      if (steps < 1 || steps > 10'000'000) read.fail(key, "must be in [1, 10000000]");
      cfg.alpha_steps = static_cast<int>(steps);
    } else if (key == "F_values") {
      cfg.F_values = read.reals(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) read.fail(key, "expected a non-negative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "output_format") {
      try {
        cfg.output_format = parse_output_format(read.string(value, key));
      } catch (const ConfigError& e) {
        read.fail(key, e.what());
      }
    } else if (key == "strong_tolerance") {
      cfg.strong_tolerance = read.real(value, key);
    } else if (key == "ensemble_size") {
      const auto size = read.integer(value, key);
      if (size < 1 || size > 100'000'000) read.fail(key, "must be in [1, 100000000]");
      cfg.ensemble_size = static_cast<int>(size);
    } else if (key == "ensemble") {
      try {
        cfg.ensemble = parse_ensemble(read.string(value, key));
      } catch (const ConfigError& e) {
        read.fail(key, e.what());
      }
    } else if (key == "scan_n_grid") {
      cfg.scan_n_grid = read.reals(value, key);
    } else if (key == "variation_threshold") {
      cfg.variation_threshold = read.real(value, key);
    } else {
      read.fail(key, "unknown field");
    }
  }
  try {
    check_fields(cfg);
  } catch (const ConfigError& e) {
    // re-anchor to the offending field's line
    const std::string what = e.what();
    const auto open = what.find('\'');
    const auto close = what.find('\'', open + 1);
    const auto colon = what.find(": ", close);
    read.fail(what.substr(open + 1, close - open - 1), what.substr(colon + 2));
  }
  return cfg;
}

void check_fields(const SweepConfig& c) {
  if (!(c.w_over_2m > 0.0 && std::isfinite(c.w_over_2m))) field_error("w_over_2m", "must be positive");
  if (!(c.alpha_min >= 0.0 && std::isfinite(c.alpha_min))) field_error("alpha_min", "must be >= 0");
  if (!(c.alpha_max >= c.alpha_min && std::isfinite(c.alpha_max))) field_error("alpha_max", "must be >= alpha_min");
  if (c.alpha_steps < 1) field_error("alpha_steps", "must be >= 1");
  if (c.alpha_max > c.alpha_min && c.alpha_steps < 2) field_error("alpha_steps", "must be >= 2 for a non-trivial range");
  for (double f : c.F_values)
    if (!(f >= 0.0 && f <= 1.0)) field_error("F_values", "every F must lie in [0, 1]");
  if (!(c.strong_tolerance > 0.0)) field_error("strong_tolerance", "must be positive");
  if (c.ensemble_size < 1) field_error("ensemble_size", "must be >= 1");
  if (c.scan_n_grid.empty()) field_error("scan_n_grid", "must not be empty");
  for (double n : c.scan_n_grid)
    if (!(n > 0.0 && n <= 1.0)) field_error("scan_n_grid", "every n'_z must lie in (0, 1]");
  if (!(c.variation_threshold >= 0.0)) field_error("variation_threshold", "must be >= 0");
}

void check_sweep_grid(const SweepConfig& c) {
  check_fields(c);
  if (!(c.alpha_max > c.alpha_min)) field_error("alpha_max", "must exceed alpha_min");
  if (c.alpha_steps < 2) field_error("alpha_steps", "must be >= 2");
}

}  // namespace relent::cli
