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

// Entanglement and distillability verdicts across boosted frames.
//
// For two qubits NPT <=> entangled <=> distillable, so every verdict here is
// read off the smallest eigenvalue of the partial transpose.

#ifndef RELENT_DISTILL_HPP
#define RELENT_DISTILL_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "relent/states.hpp"
#include "relent/wigner_map.hpp"

namespace relent {

/// |min PT eigenvalue| below this counts as the separable boundary.
inline constexpr double kVerdictTolerance = 1e-10;
inline constexpr double kDefaultStrongTolerance = 1e-9;
inline constexpr const char* kNegativityMeasure = "negativity";

/// Closed-form partial-transpose spectrum of the boosted Werner state,
/// in the order x1..x4 (not sorted).
struct PTSpectrum {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;

  RealSpectrum4 sorted() const;
  double sum() const { return x1 + x2 + x3 + x4; }
};

struct DistillVerdict {
  double min_pt_eigenvalue = 0.0;
  bool entangled = false;
  bool distillable = false;
  /// min_pt_eigenvalue within +-kVerdictTolerance of zero; reported as not
  /// distillable.
  bool boundary = false;
};

/// Ordered set of frames, strictly increasing in rapidity.
class FrameSet {
 public:
  explicit FrameSet(std::vector<BoostFrame> frames);

  /// `steps` rapidities uniformly spaced over [alpha_min, alpha_max], inclusive.
  static FrameSet uniform(const GaussianWavepacket& packet, double alpha_min, double alpha_max, int steps);

  const std::vector<BoostFrame>& frames() const { return frames_; }
  std::size_t size() const { return frames_.size(); }
  bool includes_rest_frame() const { return frames_.front().rapidity() == 0.0; }

 private:
  std::vector<BoostFrame> frames_;
};

/// Weak/strong iso-entanglement and iso-distillability over a frame set.
/// sid => sie => wie and sid => wid => wie hold by construction.
struct IsoClassification {
  bool wie = false;
  bool wid = false;
  bool sie = false;
  bool sid = false;
  std::vector<std::pair<double, double>> negativity_trace;  ///< (alpha, negativity)
  std::string measure_name = kNegativityMeasure;
};

struct InvarianceReport {
  double max_negativity = 0.0;
  double min_negativity = 0.0;
  double variation = 0.0;
  std::vector<double> negativities;  ///< one per grid point, grid order
};

/// Symmetrizes rho before taking the partial transpose over B.
DistillVerdict ppt_verdict(const DensityMatrix4& rho);

PTSpectrum werner_pt_spectrum(WernerParam fidelity, WignerCoefficient n);

/// N'_z = (2 + n^2) / (2 + 4 n^2): the boosted Werner state is distillable
/// iff F > N'_z. Ranges over [1/2, 1] for n in [0, 1].
double distill_threshold(WignerCoefficient n);

/// Smallest rapidity at which the Werner state with fidelity F stops being
/// distillable, i.e. N'_z(alpha) = F, for the given w/2m. Empty when F stays
/// above the curve for all alpha or is not distillable at rest.
std::optional<double> threshold_crossing_rapidity(WernerParam fidelity, double w_over_2m);

/// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const DensityMatrix4& rho);

using StateFamily = std::variant<WernerParam, DensityMatrix4>;

/// Throws EmptyFrameSet for an empty set and OutOfRange for a non-positive
/// tolerance.
IsoClassification classify_frames(const StateFamily& family, const FrameSet& frames,
                                  double strong_tolerance = kDefaultStrongTolerance);

/// Negativity of apply_boost(rho, n) across `n_grid`.
InvarianceReport strong_invariance_scan(const DensityMatrix4& rho, std::span<const WignerCoefficient> n_grid);

}  // namespace relent

#endif  // RELENT_DISTILL_HPP
