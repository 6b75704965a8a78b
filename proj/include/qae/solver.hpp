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

#include <span>
#include <string_view>
#include <vector>

#include "qae/anticipation.hpp"
#include "qae/simplex.hpp"
#include "qae/spectra.hpp"
#include "qae/vandermonde.hpp"

namespace qae {

enum class Classification { Positive, Singular, NonPositive, Infeasible };

std::string_view to_string(Classification c);

/// A measure over the reduced spectrum (conditioning order) with its
/// classification against the orthogonality system.
struct Solution {
  std::vector<double> mu;
  Classification classification = Classification::Infeasible;
  int nonzero_dimension = 0;
  double residual = 0.0;   // Euclidean norm of the defect of the orthogonality system
  double objective = 0.0;  // look-ahead at the configured delta
  AnticipationResult anticipation;
  // Look-ahead after every outer optimizer iteration (first entry: start point).
  std::vector<double> objective_trace;

  bool positive() const { return classification == Classification::Positive; }
};

struct SolverOptions {
  double improvement = 1.0e-3;
  int max_iterations = 100;
};

/// || sum_n mu_n e^{-i k kappa_n} - delta_k ||_2 over k = -L .. L.
double orthogonality_residual(const ReducedSpectrum& reduced, std::span<const double> mu, int order);

/// Number of weights above 1e-4.
int nonzero_dimension(std::span<const double> mu);

/// Residual, amplitudes and the residual/probability checks, without a
/// positivity test of mu.
Solution classify(std::vector<double> mu, const ReducedSpectrum& reduced, double delta, int order);

/// d = 2L+1: the only candidate is mu = b.
Solution solve_unique(const ReducedSystem& system, const ReducedSpectrum& reduced, double delta, int order);

struct FeasibleResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> mu;  // empty unless status == Optimal
};

/// Phase 1 only: a basic feasible mu, or the reason there is none.
FeasibleResult simplex_feasible(const ReducedSystem& system);

/// Repeated linearization: from a feasible corner, take the look-ahead
/// gradient as a linear cost, move to the simplex optimum for that cost, and
/// stop once the look-ahead improves by no more than options.improvement.
/// Requires delta < 0 (the objective is then convex).
Solution maximize_lookahead(const ReducedSystem& system, const ReducedSpectrum& reduced, double delta,
                            int order, const SolverOptions& options = {});

/// Classifies a given measure: Positive, NonPositive (it does not solve the
/// system) or Singular (it does, but P leaves [0, 1.001]).
Solution evaluate_fixed_measure(const ReducedMeasure& measure, const ReducedSpectrum& reduced, double delta,
                                int order);

/// (1 - t) sol1 + t sol2, re-classified.
Solution interpolate(const Solution& first, const Solution& second, double t, const ReducedSpectrum& reduced,
                     double delta, int order);

}  // namespace qae
