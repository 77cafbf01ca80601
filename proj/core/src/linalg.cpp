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

#include "relent/linalg.hpp"

#include <numeric>
#include <sstream>

#include "relent/errors.hpp"

namespace relent {

Mat4 tensor_product(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Mat4 partial_transpose(const Mat4& rho, Subsystem subsystem) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          // <ik|rho|jl> -> <jk|.|il> for A, <il|.|jk> for B
          if (subsystem == Subsystem::A)
            out(2 * j + k, 2 * i + l) = rho(2 * i + k, 2 * j + l);
          else
            out(2 * i + l, 2 * j + k) = rho(2 * i + k, 2 * j + l);
        }
  return out;
}

Mat2 partial_trace(const Mat4& rho, Subsystem subsystem) {
  Mat2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t s = 0; s < 2; ++s) {
        if (subsystem == Subsystem::B)
          out(r, c) += rho(2 * r + s, 2 * c + s);
        else
          out(r, c) += rho(2 * s + r, 2 * s + c);
      }
  return out;
}

namespace detail {

namespace {

double off_diagonal_norm(const Mat4& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p, q) with the unitary U = diag(1, e^{-i phi}) * R(theta)
// acting on the (p, q) plane; a <- U^dagger a U, v <- v U.
void rotate(Mat4& a, Mat4& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(apq / mag);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * phase;
  const Complex u_qq = c * phase;

  for (std::size_t k = 0; k < 4; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }

  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

Eigensystem4 hermitian_eigensystem(const Mat4& m) {
  if (!m.all_finite()) throw NotHermitian("eigenvalues_hermitian: non-finite matrix entry");
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "eigenvalues_hermitian: max |m - m^dagger| = " << defect << " exceeds " << kHermitianTolerance;
    throw NotHermitian(msg.str());
  }

  Mat4 a = m.hermitian_part();
  Mat4 v = Mat4::identity();
  const double scale = a.frobenius_norm();
  const double threshold = kJacobiOffDiagonalThreshold * scale;

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep == kJacobiMaxSweeps) {
      throw NonConvergence("eigenvalues_hermitian: Jacobi did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) rotate(a, v, p, q);
    ++sweep;
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  Eigensystem4 out;
  out.sweeps = sweep;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < 4; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace detail

RealSpectrum4 eigenvalues_hermitian(const Mat4& m) { return detail::hermitian_eigensystem(m).values; }

}  // namespace relent
