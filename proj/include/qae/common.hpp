// Copyright 2026 The Quantum Anticipation Explorer Authors
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

#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace qae {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Two reduced eigenvalues closer than this on the circle are merged.
inline constexpr double kDegeneracyThreshold = 1.0e-6;
// A weight above this counts towards the non-zero dimension.
inline constexpr double kNonZeroWeight = 1.0e-4;
// Orthogonality defect (Euclidean norm) above which a solution is singular.
inline constexpr double kResidualLimit = 1.0e-3;
// Upper bound of the total anticipation probability for a regular solution.
inline constexpr double kProbabilityLimit = 1.001;
// Slack of the spectral width test; antipodal points computed in floating
// point sit a few ulps above pi.
inline constexpr double kWidthTolerance = 1.0e-9;
// Phases this close below pi are shown at -pi.
inline constexpr double kWrapTolerance = 1.0e-9;
// Tolerance on the unit sum of a measure.
inline constexpr double kMeasureSumTolerance = 1.0e-10;

/// Bad user input: dimensions, malformed prescribed values, invalid ranges.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when fewer than 2L+1 reduced eigenvalues survive.
class SingularSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nodes of the Vandermonde system too close for a stable inverse.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The real reduction of the system left an imaginary residue.
class SymmetryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distance of two angles on the unit circle, in [0, pi].
inline double circular_distance(double a, double b) {
  double diff = a - b;
  if (diff < 0) diff = -diff;
  diff = diff - kTwoPi * static_cast<double>(static_cast<long long>(diff / kTwoPi));
  return diff > kPi ? kTwoPi - diff : diff;
}

}  // namespace qae
