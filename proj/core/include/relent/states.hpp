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

#ifndef RELENT_STATES_HPP
#define RELENT_STATES_HPP

#include <cstdint>

#include "relent/linalg.hpp"

namespace relent {

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// Two-spin density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix4 {
 public:
  /// Validates `m`; throws NotHermitian, TraceMismatch or NotPSD. The input is
  /// stored as given, never symmetrized.
  static DensityMatrix4 from_matrix(const Mat4& m);

  const Mat4& matrix() const { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  /// tr(rho^2).
  double purity() const;

 private:
  explicit DensityMatrix4(const Mat4& m) : matrix_(m) {}
  Mat4 matrix_;
};

/// Singlet fidelity of a Werner state, in [0, 1].
class WernerParam {
 public:
  explicit WernerParam(double fidelity);
  double value() const { return fidelity_; }

 private:
  double fidelity_;
};

/// Entries of a two-spin density matrix in upper-triangular layout:
///
///   | a1  b1  b2  b3 |
///   | .   a2  c1  c2 |
///   | .   .   a3  d  |
///   | .   .   .   a4 |
///
/// with the lower triangle given by conjugation.
struct GeneralTwoQubitParams {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0;
  Complex b1, b2, b3, c1, c2, d;
};

/// Momentum-space Gaussian width `w` and particle mass `m` (c = hbar = 1).
class GaussianWavepacket {
 public:
  GaussianWavepacket(double width, double mass);

  double width() const { return width_; }
  double mass() const { return mass_; }
  double w_over_2m() const { return width_ / (2.0 * mass_); }

  /// False once w/m >= 1, where the single-particle picture stops being
  /// physically meaningful. Computations still proceed.
  bool physically_valid() const { return width_ / mass_ < 1.0; }

  /// pi^{-3/4} w^{-3/2} exp(-q^2 / 2w^2).
  double amplitude(double q) const;

 private:
  double width_;
  double mass_;
};

enum class BellKind { PsiMinus, PsiPlus, PhiMinus, PhiPlus };

DensityMatrix4 bell_state(BellKind kind);

/// Singlet with weight F mixed with the other three Bell states at (1-F)/3.
DensityMatrix4 werner_state(WernerParam fidelity);

/// Throws TraceMismatch if sum(a) != 1 within 1e-12, NotPSD if the smallest
/// eigenvalue is below -1e-10.
DensityMatrix4 general_state(const GeneralTwoQubitParams& params);

/// Reads the upper triangle of `rho` back into parameter form.
GeneralTwoQubitParams general_params(const DensityMatrix4& rho);

/// Ginibre-ensemble state G G^dagger / tr(G G^dagger), G with i.i.d. standard
/// complex normal entries drawn from an engine seeded with `seed`.
DensityMatrix4 random_density(std::uint64_t seed);

/// rho_A (x) rho_B with each factor drawn from the 2x2 Ginibre ensemble.
DensityMatrix4 random_product_density(std::uint64_t seed);

/// 4 pi * integral_0^inf q^2 |G(q)|^2 dq by adaptive Gauss-Kronrod on
/// [0, 10w]. The exact value is 1. Throws QuadratureFailure when the error
/// estimate stays above 1e-8 relative.
double gaussian_normalization(const GaussianWavepacket& packet);

}  // namespace relent

#endif  // RELENT_STATES_HPP
