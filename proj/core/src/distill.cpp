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

#include "relent/distill.hpp"

#include <algorithm>
#include <sstream>

#include "relent/errors.hpp"

namespace relent {

namespace {

RealSpectrum4 pt_spectrum(const DensityMatrix4& rho) {
  return eigenvalues_hermitian(partial_transpose(rho.matrix().hermitian_part(), Subsystem::B));
}

double require_unit_interval(WignerCoefficient n, const char* where) {
  if (!n.in_unit_interval()) {
    std::ostringstream msg;
    msg << where << ": n'_z = " << n.value() << " outside [0, 1]";
    throw OutOfRange(msg.str());
  }
  return n.value();
}

}  // namespace

RealSpectrum4 PTSpectrum::sorted() const {
  RealSpectrum4 s{x1, x2, x3, x4};
  std::sort(s.begin(), s.end());
  return s;
}

FrameSet::FrameSet(std::vector<BoostFrame> frames) : frames_(std::move(frames)) {
  if (frames_.empty()) throw EmptyFrameSet("frame set must contain at least one frame");
  for (std::size_t k = 1; k < frames_.size(); ++k) {
    if (!(frames_[k].rapidity() > frames_[k - 1].rapidity())) {
      std::ostringstream msg;
      msg << "frame rapidities must be strictly increasing (index " << k << ")";
      throw OutOfRange(msg.str());
    }
  }
}

FrameSet FrameSet::uniform(const GaussianWavepacket& packet, double alpha_min, double alpha_max, int steps) {
  if (steps < 1) throw EmptyFrameSet("uniform frame grid needs at least one step");
  if (steps == 1) return FrameSet({BoostFrame(packet, alpha_min)});
  if (!(alpha_max > alpha_min)) throw OutOfRange("uniform frame grid needs alpha_max > alpha_min");
  std::vector<BoostFrame> frames;
  frames.reserve(static_cast<std::size_t>(steps));
  const double span = alpha_max - alpha_min;
  for (int k = 0; k < steps; ++k) {
    // endpoints exact
    const double alpha = k == steps - 1 ? alpha_max : alpha_min + span * k / (steps - 1);
    frames.emplace_back(packet, alpha);
  }
  return FrameSet(std::move(frames));
}

DistillVerdict ppt_verdict(const DensityMatrix4& rho) {
  DistillVerdict v;
  v.min_pt_eigenvalue = pt_spectrum(rho)[0];
  v.entangled = v.min_pt_eigenvalue < -kVerdictTolerance;
  v.distillable = v.entangled;
  v.boundary = std::abs(v.min_pt_eigenvalue) <= kVerdictTolerance;
  return v;
}

PTSpectrum werner_pt_spectrum(WernerParam fidelity, WignerCoefficient n) {
  const double f = fidelity.value();
  const double n2 = std::pow(require_unit_interval(n, "werner_pt_spectrum"), 2);
  PTSpectrum s;
  s.x1 = (2.0 * f + 1.0) / 6.0;
  s.x2 = (1.0 - f) / 3.0 + (1.0 - 4.0 * f) / 6.0 * n2;
  s.x3 = (1.0 - f) / 3.0 - (1.0 - 4.0 * f) / 6.0 * n2;
  s.x4 = s.x1;
  return s;
}

double distill_threshold(WignerCoefficient n) {
  const double n2 = std::pow(require_unit_interval(n, "distill_threshold"), 2);
  return (2.0 + n2) / (2.0 + 4.0 * n2);
}

std::optional<double> threshold_crossing_rapidity(WernerParam fidelity, double w_over_2m) {
  if (!(w_over_2m > 0.0)) throw OutOfRange("w/2m must be positive");
  const double f = fidelity.value();
  if (f <= 0.5) return std::nullopt;
  // N'_z(n) = F  <=>  n^2 = (2 - 2F) / (4F - 1)
  const double n_cross = std::sqrt((2.0 - 2.0 * f) / (4.0 * f - 1.0));
  const double t = std::sqrt(1.0 - n_cross) / w_over_2m;
  if (t >= 1.0) return std::nullopt;
  return 2.0 * std::atanh(t);
}

double negativity(const DensityMatrix4& rho) {
  double sum = 0.0;
  for (double x : pt_spectrum(rho))
    if (x < 0.0) sum -= x;
  return sum;
}

IsoClassification classify_frames(const StateFamily& family, const FrameSet& frames, double strong_tolerance) {
  if (!(strong_tolerance > 0.0)) throw OutOfRange("strong_tolerance must be positive");
  if (frames.size() == 0) throw EmptyFrameSet("classify_frames: no frames");

  const DensityMatrix4 rest = std::visit(
      [](const auto& f) -> DensityMatrix4 {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, WernerParam>)
          return werner_state(f);
        else
          return f;
      },
      family);

  IsoClassification out;
  out.wie = true;
  out.wid = true;
  double lo = INFINITY;
  double hi = -INFINITY;
  out.negativity_trace.reserve(frames.size());
  for (const BoostFrame& frame : frames.frames()) {
    const DensityMatrix4 boosted = apply_boost(rest, wigner_coefficient(frame));
    const DistillVerdict verdict = ppt_verdict(boosted);
    const double neg = negativity(boosted);
    out.wie = out.wie && verdict.entangled;
    out.wid = out.wid && verdict.distillable;
    lo = std::min(lo, neg);
    hi = std::max(hi, neg);
    out.negativity_trace.emplace_back(frame.rapidity(), neg);
  }
  const bool constant = hi - lo <= strong_tolerance;
  out.sie = out.wie && constant;
  out.sid = out.wid && constant;
  return out;
}

InvarianceReport strong_invariance_scan(const DensityMatrix4& rho, std::span<const WignerCoefficient> n_grid) {
  if (n_grid.empty()) throw OutOfRange("strong_invariance_scan: empty n grid");
  InvarianceReport r;
  r.negativities.reserve(n_grid.size());
  for (const WignerCoefficient& n : n_grid) {
    if (!(n.value() > 0.0)) throw OutOfRange("strong_invariance_scan: grid values must lie in (0, 1]");
    r.negativities.push_back(negativity(apply_boost(rho, n)));
  }
  const auto [lo, hi] = std::minmax_element(r.negativities.begin(), r.negativities.end());
  r.min_negativity = *lo;
  r.max_negativity = *hi;
  r.variation = r.max_negativity - r.min_negativity;
  return r;
}

}  // namespace relent
