// Copyright 2026 The uniwkb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIWKB_ERRORS_HPP_
#define UNIWKB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace uniwkb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument or problem definition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Result not representable in double precision (e.g. Bi overflow).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Ai(a) + t Bi(a) vanishes, so the logarithmic derivative has a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Quantity is undefined at a stationary point of Q (dQ/dq == 0).
class StationaryPointError : public Error {
 public:
  using Error::Error;
};

// No classically allowed region at the requested energy.
class NoBoundRegionError : public Error {
 public:
  using Error::Error;
};

// A callback returned a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Iterative procedure (quadrature, bracketing, shooting) failed to converge.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  explicit ConvergenceError(const std::string& what) : Error(what) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_ = 0.0;
};

}  // namespace uniwkb

#endif  // UNIWKB_ERRORS_HPP_
