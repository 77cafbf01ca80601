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

#ifndef RELENT_ERRORS_HPP
#define RELENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix expected to be Hermitian is not, within the fixed tolerance.
/// Always a caller bug.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter (F, n'_z, w, m, rapidity, ...) is outside its domain.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

class TraceMismatch : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class EmptyFrameSet : public Error {
 public:
  using Error::Error;
};

/// The Jacobi eigensolver hit its sweep limit.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace relent

#endif  // RELENT_ERRORS_HPP
