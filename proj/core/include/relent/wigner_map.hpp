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

// Lorentz-Wigner channel on two spins with Gaussian momentum wavepackets.
//
// A boost along x with rapidity alpha rotates each spin conditioned on its
// momentum. After averaging over the Gaussian momentum distribution (to first
// order in w/m) the effect on the spin of one particle is the linear map
//
//   E_ik  ->  M_ik(n),   n = 1 - ((w / 2m) tanh(alpha / 2))^2,
//
// and on two particles the product map E_ik (x) E_jl -> M_ik (x) M_jl.

#ifndef RELENT_WIGNER_MAP_HPP
#define RELENT_WIGNER_MAP_HPP

#include "relent/linalg.hpp"
#include "relent/states.hpp"

namespace relent {

/// Moving frame: wavepacket shape plus boost rapidity along x (alpha >= 0).
class BoostFrame {
 public:
  BoostFrame(GaussianWavepacket wavepacket, double rapidity);

  const GaussianWavepacket& wavepacket() const { return wavepacket_; }
  double rapidity() const { return rapidity_; }
  double beta() const { return std::tanh(rapidity_); }
  double gamma() const { return std::cosh(rapidity_); }

 private:
  GaussianWavepacket wavepacket_;
  double rapidity_;
};

/// Momentum-averaged first-order Wigner coefficient n'_z.
///
/// Any finite value <= 1 can be held, since w/2m > 1 drives the closed form
/// negative; the channel operations require the value to lie in [0, 1] and
/// throw OutOfRange otherwise.
class WignerCoefficient {
 public:
  explicit WignerCoefficient(double value);
  double value() const { return value_; }
  bool in_unit_interval() const { return value_ >= 0.0; }

 private:
  double value_;
};

/// Physical-consistency flags accompanying a frame evaluation.
struct FrameValidity {
  bool localized = true;             ///< w/m < 1
  bool coefficient_in_range = true;  ///< n'_z >= 0
  bool ok() const { return localized && coefficient_in_range; }
};

WignerCoefficient wigner_coefficient(const BoostFrame& frame);
FrameValidity frame_validity(const BoostFrame& frame);

/// Momentum-traced single-particle blocks M_ik = Tr_q[Lambda Psi_i (Lambda Psi_k)^dagger].
struct SingleQubitBlockSet {
  Mat2 m11, m12, m21, m22;

  /// Zero-based block lookup: (0, 0) -> m11, (0, 1) -> m12, ...
  const Mat2& operator()(std::size_t i, std::size_t k) const;
};

SingleQubitBlockSet block_set(WignerCoefficient n);

/// The single-spin channel sum_ik X_ik M_ik on an arbitrary 2x2 operator.
Mat2 apply_single(const Mat2& x, WignerCoefficient n);

/// The two-spin channel on an arbitrary 4x4 operator (linear extension).
Mat4 apply_boost(const Mat4& x, WignerCoefficient n);

DensityMatrix4 apply_boost(const DensityMatrix4& rho, WignerCoefficient n);

/// Closed form of the boosted Werner state, c_F = (1 - 4F) / 12.
DensityMatrix4 boosted_werner_closed_form(WernerParam fidelity, WignerCoefficient n);

/// Analytic continuation of the boosted state to n'_z = 0, written in terms
/// of the general_params() entries. Separate from apply_boost(rho, 0) on
/// purpose: n'_z = 0 is outside the physical range.
DensityMatrix4 limit_map(const DensityMatrix4& rho);

/// Choi matrix sum_ik E_ik (x) M_ik of the single-spin channel.
Mat4 choi_matrix(WignerCoefficient n);

}  // namespace relent

#endif  // RELENT_WIGNER_MAP_HPP
