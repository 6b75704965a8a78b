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

#include <complex>
#include <span>
#include <vector>

#include "qae/spectra.hpp"
#include "qae/vandermonde.hpp"

namespace qae {

/// Amplitudes alpha_k for k = -L .. L (index k + L) at measurement location
/// delta (in units of T), and the quantities derived from them.
struct AnticipationResult {
  int order = 0;
  double delta = 0.0;
  std::vector<std::complex<double>> alphas;
  std::vector<double> probs;
  double lookahead = 0.0;   // sum_{k=0}^{L} (k - delta) p_k
  double total_prob = 0.0;  // sum_{k=0}^{L} p_k

  std::complex<double> alpha(int k) const { return alphas[static_cast<std::size_t>(k + order)]; }
  double prob(int k) const { return probs[static_cast<std::size_t>(k + order)]; }
};

/// alpha_k = sum_n nu_n e^{-i (k - delta) phi_n} over the surviving points,
/// phi_n = lambda_n T of the representative eigenvalue. For integer delta this
/// is the same as using the reduced kappas; for fractional delta the branch
/// matters and the unreduced phase is the one that is used.
AnticipationResult amplitudes(const ReducedSpectrum& reduced, std::span<const double> weights,
                              double delta, int order);
inline AnticipationResult amplitudes(const ReducedSpectrum& reduced, const ReducedMeasure& nu,
                                     double delta, int order) {
  return amplitudes(reduced, nu.weights, delta, order);
}

/// Unit bin [b, b+1) of a look-ahead value, clamped into 0 .. L-1.
int lookahead_bin(double lookahead, int order);

/// The look-ahead as a quadratic form in the weights,
/// A(mu) = sum_{k=0}^{L} (k - delta) |sum_n mu_n c_kn|^2, c_kn = e^{-i(k-delta) phi_n}.
/// Positive semidefinite for delta < 0.
class LookaheadObjective {
 public:
  LookaheadObjective(const ReducedSpectrum& reduced, double delta, int order);

  double value(std::span<const double> mu) const;
  /// dA/dmu_n over all variables.
  std::vector<double> gradient(std::span<const double> mu) const;

  std::size_t dimension() const { return dimension_; }

 private:
  std::vector<std::complex<double>> amplitudes(std::span<const double> mu) const;

  int order_;
  double delta_;
  std::size_t dimension_;
  std::vector<std::complex<double>> coefficients_;  // (L+1) x d, row k
};

/// The structural variables parametrize the feasible plane: slack = b - A s.
std::vector<double> full_from_structural(const ReducedSystem& system, std::span<const double> structural);
/// Gradient of A with respect to the structural variables along that plane.
std::vector<double> structural_gradient(const ReducedSystem& system, const LookaheadObjective& objective,
                                        std::span<const double> structural);

}  // namespace qae
