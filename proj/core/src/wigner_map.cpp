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

#include "relent/wigner_map.hpp"

#include <sstream>

#include "relent/errors.hpp"

namespace relent {

namespace {

double unit_interval(WignerCoefficient n, const char* where) {
  if (!n.in_unit_interval()) {
    std::ostringstream msg;
    msg << where << ": n'_z = " << n.value() << " outside [0, 1]";
    throw OutOfRange(msg.str());
  }
  return n.value();
}

}  // namespace

BoostFrame::BoostFrame(GaussianWavepacket wavepacket, double rapidity)
    : wavepacket_(wavepacket), rapidity_(rapidity) {
  if (!(rapidity >= 0.0 && std::isfinite(rapidity))) {
    std::ostringstream msg;
    msg << "rapidity " << rapidity << " must be finite and >= 0";
    throw OutOfRange(msg.str());
  }
}

WignerCoefficient::WignerCoefficient(double value) : value_(value) {
  if (!(std::isfinite(value) && value <= 1.0)) {
    std::ostringstream msg;
    msg << "n'_z = " << value << " must be finite and <= 1";
    throw OutOfRange(msg.str());
  }
}

WignerCoefficient wigner_coefficient(const BoostFrame& frame) {
  const double x = frame.wavepacket().w_over_2m() * std::tanh(0.5 * frame.rapidity());
  return WignerCoefficient(1.0 - x * x);
}

FrameValidity frame_validity(const BoostFrame& frame) {
  FrameValidity v;
  v.localized = frame.wavepacket().physically_valid();
  v.coefficient_in_range = wigner_coefficient(frame).in_unit_interval();
  return v;
}

const Mat2& SingleQubitBlockSet::operator()(std::size_t i, std::size_t k) const {
  if (i == 0) return k == 0 ? m11 : m12;
  return k == 0 ? m21 : m22;
}

SingleQubitBlockSet block_set(WignerCoefficient n) {
  const double v = unit_interval(n, "block_set");
  const double plus = 0.5 * (1.0 + v);
  const double minus = 0.5 * (1.0 - v);
  SingleQubitBlockSet b;
  b.m11 = Mat2::from_rows({plus, 0.0, 0.0, minus});
  b.m22 = Mat2::from_rows({minus, 0.0, 0.0, plus});
  b.m12 = Mat2::from_rows({0.0, plus, -minus, 0.0});
  b.m21 = Mat2::from_rows({0.0, -minus, plus, 0.0});
  return b;
}

Mat2 apply_single(const Mat2& x, WignerCoefficient n) {
  const SingleQubitBlockSet blocks = block_set(n);
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) out += x(i, k) * blocks(i, k);
  return out;
}

Mat4 apply_boost(const Mat4& x, WignerCoefficient n) {
  const SingleQubitBlockSet blocks = block_set(n);
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const Complex coeff = x(2 * i + j, 2 * k + l);
          if (coeff == 0.0) continue;
          out += coeff * tensor_product(blocks(i, k), blocks(j, l));
        }
  return out;
}

DensityMatrix4 apply_boost(const DensityMatrix4& rho, WignerCoefficient n) {
  return DensityMatrix4::from_matrix(apply_boost(rho.matrix(), n));
}

DensityMatrix4 boosted_werner_closed_form(WernerParam fidelity, WignerCoefficient n) {
  const double v = unit_interval(n, "boosted_werner_closed_form");
  const double c = (1.0 - 4.0 * fidelity.value()) / 12.0;
  const double n2 = v * v;
  Mat4 m;
  m(0, 0) = 0.25 + c * n2;
  m(1, 1) = 0.25 - c * n2;
  m(2, 2) = 0.25 - c * n2;
  m(3, 3) = 0.25 + c * n2;
  m(0, 3) = m(3, 0) = c * (n2 - 1.0);
  m(1, 2) = m(2, 1) = c * (n2 + 1.0);
  return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 limit_map(const DensityMatrix4& rho) {
  const GeneralTwoQubitParams p = general_params(rho);
  const Complex i(0.0, 1.0);
  const Complex u = 0.5 * i * (p.b1.imag() + p.d.imag());
  const Complex v = 0.5 * i * (p.b2.imag() + p.c2.imag());
  const double w = 0.5 * (p.b3.real() - p.c1.real());
  const Mat4 m = Mat4::from_rows({
      0.25, u, v, w,
      std::conj(u), 0.25, -w, v,
      std::conj(v), -w, 0.25, u,
      w, std::conj(v), std::conj(u), 0.25,
  });
  return DensityMatrix4::from_matrix(m);
}

Mat4 choi_matrix(WignerCoefficient n) {
  const SingleQubitBlockSet blocks = block_set(n);
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k) out += tensor_product(Mat2::unit(i, k), blocks(i, k));
  return out;
}

}  // namespace relent
