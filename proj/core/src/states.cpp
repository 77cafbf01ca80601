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

#include "relent/states.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <numbers>
#include <random>
#include <sstream>

#include "relent/errors.hpp"

namespace relent {

namespace {

template <std::size_t N>
SquareMatrix<N> ginibre_state(std::mt19937_64& engine) {
  std::normal_distribution<double> normal(0.0, 1.0);
  SquareMatrix<N> g;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const double re = normal(engine);
      const double im = normal(engine);
      g(i, j) = Complex(re, im);
    }
  SquareMatrix<N> rho = g * g.adjoint();
  return rho * Complex(1.0 / rho.trace().real());
}

}  // namespace

DensityMatrix4 DensityMatrix4::from_matrix(const Mat4& m) {
  const double defect = m.all_finite() ? m.hermiticity_defect() : INFINITY;
  if (!(defect <= kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (max |m - m^dagger| = " << defect << ")";
    throw NotHermitian(msg.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace is " << tr.real() << ", expected 1";
    throw TraceMismatch(msg.str());
  }
  const double smallest = eigenvalues_hermitian(m)[0];
  if (smallest < -kPsdTolerance) {
    std::ostringstream msg;
    msg << "density matrix has eigenvalue " << smallest << " < -" << kPsdTolerance;
    throw NotPSD(msg.str());
  }
  return DensityMatrix4(m);
}

double DensityMatrix4::purity() const { return (matrix_ * matrix_).trace().real(); }

WernerParam::WernerParam(double fidelity) : fidelity_(fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    std::ostringstream msg;
    msg << "Werner fidelity F = " << fidelity << " outside [0, 1]";
    throw OutOfRange(msg.str());
  }
}

GaussianWavepacket::GaussianWavepacket(double width, double mass) : width_(width), mass_(mass) {
  if (!(width > 0.0 && std::isfinite(width))) throw OutOfRange("wavepacket width w must be positive");
  if (!(mass > 0.0 && std::isfinite(mass))) throw OutOfRange("particle mass m must be positive");
}

double GaussianWavepacket::amplitude(double q) const {
  using std::numbers::pi;
  return std::pow(pi, -0.75) * std::pow(width_, -1.5) * std::exp(-q * q / (2.0 * width_ * width_));
}

DensityMatrix4 bell_state(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  std::array<Complex, 4> v{};
  switch (kind) {
    case BellKind::PsiMinus: v = {0.0, h, -h, 0.0}; break;
    case BellKind::PsiPlus: v = {0.0, h, h, 0.0}; break;
    case BellKind::PhiMinus: v = {h, 0.0, 0.0, -h}; break;
    case BellKind::PhiPlus: v = {h, 0.0, 0.0, h}; break;
  }
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = v[i] * std::conj(v[j]);
  return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 werner_state(WernerParam fidelity) {
  const double f = fidelity.value();
  const double outer = (1.0 - f) / 3.0;
  const double inner = (2.0 * f + 1.0) / 6.0;
  const double coherence = (1.0 - 4.0 * f) / 6.0;
  Mat4 m;
  m(0, 0) = outer;
  m(1, 1) = inner;
  m(2, 2) = inner;
  m(3, 3) = outer;
  m(1, 2) = coherence;
  m(2, 1) = coherence;
  return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 general_state(const GeneralTwoQubitParams& p) {
  const double sum = p.a1 + p.a2 + p.a3 + p.a4;
  if (std::abs(sum - 1.0) > kTraceTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "general_state: a1 + a2 + a3 + a4 = " << sum << ", expected 1";
    throw TraceMismatch(msg.str());
  }
  const Mat4 m = Mat4::from_rows({
      p.a1, p.b1, p.b2, p.b3,
      std::conj(p.b1), p.a2, p.c1, p.c2,
      std::conj(p.b2), std::conj(p.c1), p.a3, p.d,
      std::conj(p.b3), std::conj(p.c2), std::conj(p.d), p.a4,
  });
  return DensityMatrix4::from_matrix(m);
}

GeneralTwoQubitParams general_params(const DensityMatrix4& rho) {
  GeneralTwoQubitParams p;
  p.a1 = rho(0, 0).real();
  p.a2 = rho(1, 1).real();
  p.a3 = rho(2, 2).real();
  p.a4 = rho(3, 3).real();
  p.b1 = rho(0, 1);
  p.b2 = rho(0, 2);
  p.b3 = rho(0, 3);
  p.c1 = rho(1, 2);
  p.c2 = rho(1, 3);
  p.d = rho(2, 3);
  return p;
}

DensityMatrix4 random_density(std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return DensityMatrix4::from_matrix(ginibre_state<4>(engine));
}

DensityMatrix4 random_product_density(std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const Mat2 a = ginibre_state<2>(engine);
  const Mat2 b = ginibre_state<2>(engine);
  return DensityMatrix4::from_matrix(tensor_product(a, b));
}

double gaussian_normalization(const GaussianWavepacket& packet) {
  using std::numbers::pi;
  constexpr double kRelativeTolerance = 1e-8;
  constexpr unsigned kMaxDepth = 15;

  auto integrand = [&](double q) {
    const double g = packet.amplitude(q);
    return 4.0 * pi * q * q * g * g;
  };
  double error = 0.0;
  double l1 = 0.0;
  // Beyond 10w the integrand is below exp(-100) relative to its peak.
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, 10.0 * packet.width(), kMaxDepth, kRelativeTolerance, &error, &l1);
  if (!(error <= kRelativeTolerance * std::abs(value))) {
    std::ostringstream msg;
    msg << "gaussian_normalization: error estimate " << error << " above tolerance";
    throw QuadratureFailure(msg.str());
  }
  return value;
}

}  // namespace relent
