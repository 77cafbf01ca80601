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

// Test-only reference computations. Nothing here calls the Jacobi solver or
// the channel code; they are the independent side of each check.

#ifndef RELENT_TESTS_ORACLES_HPP
#define RELENT_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "relent/linalg.hpp"

namespace relent::testing {

/// Random Hermitian matrix with entries of order one.
inline Mat4 random_hermitian(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = normal(rng);
    for (std::size_t j = i + 1; j < 4; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

template <std::size_t N>
SquareMatrix<N> random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  SquareMatrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

/// Haar-ish unitary from Gram-Schmidt on a Ginibre matrix.
inline Mat4 random_unitary(std::mt19937_64& rng) {
  Mat4 g = random_complex<4>(rng);
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < 4; ++r) dot += std::conj(g(r, p)) * g(r, c);
      for (std::size_t r = 0; r < 4; ++r) g(r, c) -= dot * g(r, p);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < 4; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < 4; ++r) g(r, c) /= norm;
  }
  return g;
}

/// Characteristic polynomial lambda^4 + c[3] lambda^3 + ... + c[0] by
/// Faddeev-LeVerrier.
inline std::array<Complex, 4> characteristic_polynomial(const Mat4& a) {
  std::array<Complex, 5> c{};
  c[4] = 1.0;
  Mat4 m;  // M_0 = 0
  for (int k = 1; k <= 4; ++k) {
    m = a * m + c[static_cast<std::size_t>(4 - k + 1)] * Mat4::identity();
    c[static_cast<std::size_t>(4 - k)] = -(a * m).trace() / static_cast<double>(k);
  }
  return {c[0], c[1], c[2], c[3]};
}

/// Real roots of the characteristic polynomial, ascending, via Durand-Kerner
/// followed by Newton polishing.
inline std::array<double, 4> quartic_eigenvalue_oracle(const Mat4& a) {
  const auto c = characteristic_polynomial(a);
  auto poly = [&](Complex x) { return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0]; };
  auto dpoly = [&](Complex x) { return ((4.0 * x + 3.0 * c[3]) * x + 2.0 * c[2]) * x + c[1]; };

  std::array<Complex, 4> z{Complex(0.4, 0.9), Complex(0.4, 0.9), Complex(0.4, 0.9), Complex(0.4, 0.9)};
  for (std::size_t k = 1; k < 4; ++k) z[k] = z[k - 1] * Complex(0.4, 0.9);
  const double scale = 1.0 + a.frobenius_norm();
  for (auto& zk : z) zk *= scale;
  for (int iter = 0; iter < 2000; ++iter) {
    for (std::size_t k = 0; k < 4; ++k) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < 4; ++j)
        if (j != k) denom *= z[k] - z[j];
      z[k] -= poly(z[k]) / denom;
    }
  }
  std::array<double, 4> roots{};
  for (std::size_t k = 0; k < 4; ++k) {
    double x = z[k].real();
    for (int it = 0; it < 5; ++it) {
      const Complex d = dpoly(x);
      if (std::abs(d) < 1e-14) break;
      x -= (poly(x) / d).real();
    }
    roots[k] = x;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Eigenvalues of the real symmetric 2x2 [[a, b], [b, d]].
inline std::array<double, 2> symmetric2x2_eigenvalues(double a, double b, double d) {
  const double mid = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), b);
  return {mid - rad, mid + rad};
}

/// max |a[k] - b[k]| over ascending spectra.
inline double spectrum_distance(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

}  // namespace relent::testing

#endif  // RELENT_TESTS_ORACLES_HPP
