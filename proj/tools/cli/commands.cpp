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

#include "cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "relent/distill.hpp"
#include "relent/states.hpp"
#include "relent/wigner_map.hpp"

namespace relent::cli {

namespace {

using nlohmann::json;

// Particle mass is the unit; only w/2m enters the model.
GaussianWavepacket packet_for(const SweepConfig& c) { return GaussianWavepacket(2.0 * c.w_over_2m, 1.0); }

void require_coefficient_in_range(const SweepConfig& c) {
  const WignerCoefficient n = wigner_coefficient(BoostFrame(packet_for(c), c.alpha_max));
  if (!n.in_unit_interval()) {
    std::ostringstream msg;
    msg << "field 'w_over_2m': (w/2m) tanh(alpha_max/2) exceeds 1, so n'_z < 0 on part of the grid";
    throw ConfigError(msg.str());
  }
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void write_key_values(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << k << ',' << v << '\n';
}

std::string bit(bool b) { return b ? "1" : "0"; }

struct Sample {
  DensityMatrix4 state;
  std::uint64_t seed;
};

std::vector<Sample> draw_ensemble(const SweepConfig& c) {
  std::vector<Sample> samples;
  const auto size = static_cast<std::size_t>(c.ensemble_size);
  samples.reserve(size);
  switch (c.ensemble) {
    case Ensemble::Random:
      for (std::size_t k = 0; k < size; ++k) samples.push_back({random_density(c.seed + k), c.seed + k});
      break;
    case Ensemble::Separable:
      for (std::size_t k = 0; k < size; ++k) samples.push_back({random_product_density(c.seed + k), c.seed + k});
      break;
    case Ensemble::RandomNpt: {
      const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(size);
      for (std::uint64_t k = 0; k < max_attempts && samples.size() < size; ++k) {
        DensityMatrix4 rho = random_density(c.seed + k);
        if (ppt_verdict(rho).entangled) samples.push_back({rho, c.seed + k});
      }
      break;
    }
    case Ensemble::Werner: {
      std::vector<double> fs = c.F_values;
      if (fs.empty()) {
        for (std::size_t k = 0; k < size; ++k)
          fs.push_back(size == 1 ? 1.0 : 0.6 + 0.4 * static_cast<double>(k) / static_cast<double>(size - 1));
      }
      for (double f : fs) samples.push_back({werner_state(WernerParam(f)), c.seed});
      break;
    }
  }
  return samples;
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_label(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<SweepRow> sweep_rows(const SweepConfig& config) {
  check_sweep_grid(config);
  require_coefficient_in_range(config);
  const GaussianWavepacket packet = packet_for(config);

  std::vector<SweepRow> rows;
  for (double alpha : config.alpha_grid()) {
    const WignerCoefficient n = wigner_coefficient(BoostFrame(packet, alpha));
    SweepRow row;
    row.alpha = alpha;
    row.n_z = n.value();
    row.threshold_N_z = distill_threshold(n);
    for (double f : config.F_values) {
      const WernerParam fidelity(f);
      const DensityMatrix4 boosted = boosted_werner_closed_form(fidelity, n);
      WernerColumn col;
      col.F = f;
      col.x2 = werner_pt_spectrum(fidelity, n).x2;
      col.negativity = negativity(boosted);
      col.distillable = ppt_verdict(boosted).distillable;
      row.per_F.push_back(col);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void cmd_sweep(const SweepConfig& config, std::ostream& out) {
  const std::vector<SweepRow> rows = sweep_rows(config);
  if (config.output_format == OutputFormat::Csv) {
    out << "alpha,n_z,N_z";
    for (double f : config.F_values) {
      const std::string label = "F=" + format_label(f);
      out << ',' << label << "_x2," << label << "_negativity," << label << "_distillable";
    }
    out << '\n';
    for (const SweepRow& row : rows) {
      out << format_real(row.alpha) << ',' << format_real(row.n_z) << ',' << format_real(row.threshold_N_z);
      for (const WernerColumn& col : row.per_F)
        out << ',' << format_real(col.x2) << ',' << format_real(col.negativity) << ',' << bit(col.distillable);
      out << '\n';
    }
    return;
  }

  json doc;
  doc["w_over_2m"] = config.w_over_2m;
  doc["localization_warning"] = config.localization_warning();
  json jrows = json::array();
  for (const SweepRow& row : rows) {
    json jr{{"alpha", row.alpha}, {"n_z", row.n_z}, {"N_z", row.threshold_N_z}};
    json cols = json::array();
    for (const WernerColumn& col : row.per_F)
      cols.push_back({{"F", col.F}, {"x2", col.x2}, {"negativity", col.negativity}, {"distillable", col.distillable}});
    jr["werner"] = std::move(cols);
    jrows.push_back(std::move(jr));
  }
  doc["rows"] = std::move(jrows);
  write_json(out, doc);
}

void cmd_classify(const SweepConfig& config, std::ostream& out) {
  check_sweep_grid(config);
  if (config.F_values.empty()) throw ConfigError("field 'F_values': classify needs at least one F");
  require_coefficient_in_range(config);

  const GaussianWavepacket packet = packet_for(config);
  const FrameSet frames = FrameSet::uniform(packet, config.alpha_min, config.alpha_max, config.alpha_steps);

  struct Result {
    double F;
    IsoClassification iso;
    std::optional<double> crossing;
  };
  std::vector<Result> results;
  for (double f : config.F_values) {
    const WernerParam fidelity(f);
    results.push_back({f, classify_frames(fidelity, frames, config.strong_tolerance),
                       threshold_crossing_rapidity(fidelity, config.w_over_2m)});
  }

  if (config.output_format == OutputFormat::Csv) {
    out << "F,wie,wid,sie,sid,min_negativity,max_negativity\n";
    for (const Result& r : results) {
      double lo = INFINITY, hi = -INFINITY;
      for (const auto& [alpha, neg] : r.iso.negativity_trace) {
        lo = std::min(lo, neg);
        hi = std::max(hi, neg);
      }
      out << format_label(r.F) << ',' << bit(r.iso.wie) << ',' << bit(r.iso.wid) << ',' << bit(r.iso.sie) << ','
          << bit(r.iso.sid) << ',' << format_real(lo) << ',' << format_real(hi) << '\n';
    }
    return;
  }

  json doc;
  doc["measure"] = kNegativityMeasure;
  doc["strong_tolerance"] = config.strong_tolerance;
  doc["w_over_2m"] = config.w_over_2m;
  doc["includes_rest_frame"] = frames.includes_rest_frame();
  json jframes = json::array();
  for (const BoostFrame& frame : frames.frames()) jframes.push_back(frame.rapidity());
  doc["frames"] = std::move(jframes);
  json jresults = json::array();
  for (const Result& r : results) {
    json trace = json::array();
    for (const auto& [alpha, neg] : r.iso.negativity_trace) trace.push_back({alpha, neg});
    json jr{{"F", r.F},          {"wie", r.iso.wie}, {"wid", r.iso.wid},
            {"sie", r.iso.sie},  {"sid", r.iso.sid}, {"trace", std::move(trace)}};
    jr["crossing_rapidity"] = r.crossing ? json(*r.crossing) : json(nullptr);
    jresults.push_back(std::move(jr));
  }
  doc["results"] = std::move(jresults);
  write_json(out, doc);
}

void cmd_conjecture_scan(const SweepConfig& config, std::ostream& out) {
  check_fields(config);
  std::vector<WignerCoefficient> grid;
  for (double n : config.scan_n_grid) grid.emplace_back(n);

  const std::vector<Sample> samples = draw_ensemble(config);
  std::size_t entangled = 0;
  std::size_t exceeding = 0;
  double min_var = INFINITY, max_var = -INFINITY;
  double entangled_min_var = INFINITY;
  for (const Sample& s : samples) {
    const InvarianceReport report = strong_invariance_scan(s.state, grid);
    min_var = std::min(min_var, report.variation);
    max_var = std::max(max_var, report.variation);
    if (ppt_verdict(s.state).entangled) {
      ++entangled;
      entangled_min_var = std::min(entangled_min_var, report.variation);
      if (report.variation > config.variation_threshold) ++exceeding;
    }
  }
  const double fraction = entangled == 0 ? 0.0 : static_cast<double>(exceeding) / static_cast<double>(entangled);

  if (config.output_format == OutputFormat::Csv) {
    write_key_values(out, {
                              {"ensemble", std::string(to_string(config.ensemble))},
                              {"seed", std::to_string(config.seed)},
                              {"samples", std::to_string(samples.size())},
                              {"entangled", std::to_string(entangled)},
                              {"exceeding", std::to_string(exceeding)},
                              {"fraction", format_real(fraction)},
                              {"min_variation", format_real(samples.empty() ? 0.0 : min_var)},
                              {"max_variation", format_real(samples.empty() ? 0.0 : max_var)},
                              {"variation_threshold", format_real(config.variation_threshold)},
                          });
    return;
  }

  json doc;
  doc["ensemble"] = to_string(config.ensemble);
  doc["seed"] = config.seed;
  doc["measure"] = kNegativityMeasure;
  doc["scan_n_grid"] = config.scan_n_grid;
  doc["variation_threshold"] = config.variation_threshold;
  doc["samples"] = samples.size();
  doc["entangled"] = entangled;
  doc["exceeding"] = exceeding;
  doc["fraction"] = fraction;
  doc["min_variation"] = samples.empty() ? 0.0 : min_var;
  doc["max_variation"] = samples.empty() ? 0.0 : max_var;
  doc["entangled_min_variation"] = entangled == 0 ? json(nullptr) : json(entangled_min_var);
  doc["note"] = "empirical evidence only; a finite scan cannot prove non-existence";
  write_json(out, doc);
}

void cmd_validate(const SweepConfig& config, std::ostream& out) {
  check_fields(config);
  const GaussianWavepacket packet = packet_for(config);
  const BoostFrame lo(packet, config.alpha_min);
  const BoostFrame hi(packet, config.alpha_max);
  const WignerCoefficient n_hi = wigner_coefficient(lo);  // n'_z decreases with alpha
  const WignerCoefficient n_lo = wigner_coefficient(hi);

  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  if (config.localization_warning()) {
    warnings.push_back("w/m = " + format_label(2.0 * config.w_over_2m) +
                       " >= 1: momentum spread comparable to the mass; particle creation and fast wavepacket "
                       "spreading make the first-order spin model unreliable");
  }
  if (!n_lo.in_unit_interval()) {
    warnings.push_back("n'_z = " + format_label(n_lo.value()) +
                       " < 0 at alpha_max: first-order coefficient outside its model range");
  }
  if (config.alpha_max == 0.0) notes.push_back("alpha range is {0}: all frames coincide with the rest frame");

  if (config.output_format == OutputFormat::Csv) {
    std::vector<std::pair<std::string, std::string>> rows{
        {"w_over_2m", format_real(config.w_over_2m)},
        {"w_over_m", format_real(2.0 * config.w_over_2m)},
        {"beta_min", format_real(lo.beta())},
        {"beta_max", format_real(hi.beta())},
        {"gamma_min", format_real(lo.gamma())},
        {"gamma_max", format_real(hi.gamma())},
        {"n_z_min", format_real(n_lo.value())},
        {"n_z_max", format_real(n_hi.value())},
    };
    for (const auto& w : warnings) rows.emplace_back("warning", w);
    for (const auto& n : notes) rows.emplace_back("note", n);
    write_key_values(out, rows);
    return;
  }

  json doc;
  doc["w_over_2m"] = config.w_over_2m;
  doc["w_over_m"] = 2.0 * config.w_over_2m;
  doc["alpha"] = {config.alpha_min, config.alpha_max};
  doc["alpha_steps"] = config.alpha_steps;
  doc["beta"] = {lo.beta(), hi.beta()};
  doc["gamma"] = {lo.gamma(), hi.gamma()};
  doc["n_z"] = {n_lo.value(), n_hi.value()};
  if (n_lo.in_unit_interval())
    doc["N_z"] = {distill_threshold(n_hi), distill_threshold(n_lo)};
  else
    doc["N_z"] = nullptr;
  doc["warnings"] = warnings;
  doc["notes"] = notes;
  write_json(out, doc);
}

bool outputs_match(std::string_view produced, std::string_view golden, double tolerance, std::string* reason) {
  auto starts_number = [](std::string_view s, std::size_t i) {
    const auto digit = [&](std::size_t k) { return k < s.size() && s[k] >= '0' && s[k] <= '9'; };
    if (digit(i)) return true;
    if (i < s.size() && (s[i] == '-' || s[i] == '+' || s[i] == '.'))
      return digit(i + 1) || (s[i] != '.' && i + 2 < s.size() && s[i + 1] == '.' && digit(i + 2));
    return false;
  };
  auto fail = [&](std::size_t line, const std::string& what) {
    if (reason) *reason = "line " + std::to_string(line) + ": " + what;
    return false;
  };

  std::size_t i = 0, j = 0, line = 1;
  while (i < produced.size() && j < golden.size()) {
    if (starts_number(produced, i) && starts_number(golden, j)) {
      const std::string a_text(produced.substr(i, 64));
      const std::string b_text(golden.substr(j, 64));
      char* a_end = nullptr;
      char* b_end = nullptr;
      const double a = std::strtod(a_text.c_str(), &a_end);
      const double b = std::strtod(b_text.c_str(), &b_end);
      if (std::abs(a - b) > tolerance * std::max(1.0, std::abs(b)))
        return fail(line, "numeric mismatch " + a_text.substr(0, static_cast<std::size_t>(a_end - a_text.c_str())) +
                              " vs " + b_text.substr(0, static_cast<std::size_t>(b_end - b_text.c_str())));
      i += static_cast<std::size_t>(a_end - a_text.c_str());
      j += static_cast<std::size_t>(b_end - b_text.c_str());
      continue;
    }
    if (produced[i] != golden[j]) return fail(line, "text differs");
    if (produced[i] == '\n') ++line;
    ++i;
    ++j;
  }
  if (i != produced.size() || j != golden.size()) return fail(line, "length differs");
  return true;
}

}  // namespace relent::cli
