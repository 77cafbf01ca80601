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

// Dense complex 2x2 / 4x4 linear algebra for two-qubit states.
//
// Two-qubit operators use the product basis |uu>, |ud>, |du>, |dd>, i.e. the
// row index of a 4x4 matrix is 2*a + b for qubit A index a and qubit B index
// b (0 = spin up, 1 = spin down). All indices in this API are zero-based.

#ifndef RELENT_LINALG_HPP
#define RELENT_LINALG_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace relent {

using Complex = std::complex<double>;

/// Entrywise Hermiticity tolerance used throughout the library.
inline constexpr double kHermitianTolerance = 1e-12;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;

  static constexpr SquareMatrix zero() { return SquareMatrix{}; }

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Matrix unit E_{row,col}.
  static constexpr SquareMatrix unit(std::size_t row, std::size_t col) {
    SquareMatrix m;
    m(row, col) = 1.0;
    return m;
  }

  /// Row-major construction.
  static constexpr SquareMatrix from_rows(const std::array<Complex, N * N>& rows) {
    SquareMatrix m;
    m.data_ = rows;
    return m;
  }

  constexpr Complex& operator()(std::size_t row, std::size_t col) { return data_[row * N + col]; }
  constexpr const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * N + col];
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  /// (m + m^dagger) / 2.
  SquareMatrix hermitian_part() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return m;
  }

  /// max |m - m^dagger| entrywise.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

  bool is_hermitian(double tol = kHermitianTolerance) const { return hermiticity_defect() <= tol; }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  const std::array<Complex, N * N>& entries() const { return data_; }

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;

/// Four real eigenvalues, ascending. Degenerate values appear repeated.
using RealSpectrum4 = std::array<double, 4>;

enum class Subsystem { A, B };

/// max |a - b| entrywise.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

/// Kronecker product: result(2i + k, 2j + l) = a(i, j) * b(k, l).
Mat4 tensor_product(const Mat2& a, const Mat2& b);

/// Transposes the tensor factor of `subsystem`. An involution.
Mat4 partial_transpose(const Mat4& rho, Subsystem subsystem);

/// Traces out `subsystem`, returning the reduced operator of the other one.
Mat2 partial_trace(const Mat4& rho, Subsystem subsystem);

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic complex Jacobi; throws NotHermitian if max |m - m^dagger| exceeds
/// kHermitianTolerance and NonConvergence after 100 sweeps.
RealSpectrum4 eigenvalues_hermitian(const Mat4& m);

namespace detail {

struct Eigensystem4 {
  RealSpectrum4 values;
  /// Column k is the unit eigenvector of values[k].
  Mat4 vectors;
  int sweeps = 0;
};

inline constexpr double kJacobiOffDiagonalThreshold = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Jacobi diagonalization with eigenvectors; backs eigenvalues_hermitian.
Eigensystem4 hermitian_eigensystem(const Mat4& m);

}  // namespace detail

}  // namespace relent

#endif  // RELENT_LINALG_HPP
