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

#include "qae/solver.hpp"

#include <algorithm>
#include <cmath>

#include "qae/common.hpp"
#include "qae/kernels.hpp"

namespace qae {
namespace {

constexpr double kNegativeClamp = 1.0e-10;

bool probability_ok(double p) { return p >= 0.0 && p <= kProbabilityLimit; }

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Positive:
      return "positive";
    case Classification::Singular:
      return "singular";
    case Classification::NonPositive:
      return "non-positive";
    case Classification::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

double orthogonality_residual(const ReducedSpectrum& reduced, std::span<const double> mu, int order) {
  const std::size_t count = reduced.actual_dimension();
  if (mu.size() != count) throw InvalidInput("residual: measure dimension mismatch");
  std::vector<std::complex<double>> weights(mu.begin(), mu.end());
  std::vector<std::complex<double>> nodes(count);
  for (std::size_t n = 0; n < count; ++n) nodes[n] = std::polar(1.0, -reduced.kappas[n]);
  std::vector<std::complex<double>> sums(static_cast<std::size_t>(order) + 1);
  kernels::power_sums(weights, nodes, sums);
  // Real weights: the k < 0 sums are conjugates of the k > 0 ones.
  double squared = std::norm(sums[0] - 1.0);
  for (std::size_t k = 1; k < sums.size(); ++k) squared += 2.0 * std::norm(sums[k]);
  return std::sqrt(squared);
}

int nonzero_dimension(std::span<const double> mu) {
  return static_cast<int>(std::count_if(mu.begin(), mu.end(), [](double w) { return w > kNonZeroWeight; }));
}

Solution classify(std::vector<double> mu, const ReducedSpectrum& reduced, double delta, int order) {
  Solution s;
  s.residual = orthogonality_residual(reduced, mu, order);
  s.anticipation = amplitudes(reduced, mu, delta, order);
  s.objective = s.anticipation.lookahead;
  s.nonzero_dimension = nonzero_dimension(mu);
  s.mu = std::move(mu);
  const bool ok = s.residual <= kResidualLimit && probability_ok(s.anticipation.total_prob);
  s.classification = ok ? Classification::Positive : Classification::Singular;
  return s;
}

Solution solve_unique(const ReducedSystem& system, const ReducedSpectrum& reduced, double delta, int order) {
  std::vector<double> mu(system.b);
  const bool negative = std::any_of(mu.begin(), mu.end(), [](double w) { return w < -kNegativeClamp; });
  for (auto& w : mu) w = std::max(w, 0.0);
  if (negative) {
    Solution s;
    s.mu = std::move(mu);
    s.classification = Classification::NonPositive;
    s.residual = orthogonality_residual(reduced, s.mu, order);
    return s;
  }
  Solution s = classify(std::move(mu), reduced, delta, order);
  s.objective_trace = {s.objective};
  return s;
}

FeasibleResult simplex_feasible(const ReducedSystem& system) {
  CanonicalSimplex simplex(system);
  FeasibleResult result;
  result.status = simplex.find_feasible();
  if (result.status == LpStatus::Optimal) result.mu = simplex.solution();
  return result;
}

Solution maximize_lookahead(const ReducedSystem& system, const ReducedSpectrum& reduced, double delta,
                            int order, const SolverOptions& options) {
  if (!(delta < 0.0)) {
    throw InvalidInput("optimum measure needs a negative location (got " + std::to_string(delta) + ")");
  }
  if (system.structurals() == 0) return solve_unique(system, reduced, delta, order);

  CanonicalSimplex simplex(system);
  const LpStatus start = simplex.find_feasible();
  if (start != LpStatus::Optimal) {
    Solution s;
    s.classification = start == LpStatus::Infeasible ? Classification::NonPositive : Classification::Singular;
    return s;
  }

  const LookaheadObjective objective(reduced, delta, order);
  std::vector<double> best = simplex.solution();
  double best_value = objective.value(best);
  std::vector<double> trace{best_value};
  bool converged = false;

  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    const auto gradient = objective.gradient(best);
    const LpStatus status = simplex.maximize(gradient);
    if (status != LpStatus::Optimal) break;
    auto candidate = simplex.solution();
    const double value = objective.value(candidate);
    const bool improved = value > best_value + options.improvement;
    if (value > best_value) {
      best = std::move(candidate);
      best_value = value;
    }
    trace.push_back(best_value);
    if (!improved) {
      converged = true;
      break;
    }
  }

  Solution s = classify(std::move(best), reduced, delta, order);
  s.objective_trace = std::move(trace);
  if (!converged) s.classification = Classification::Singular;
  return s;
}

Solution evaluate_fixed_measure(const ReducedMeasure& measure, const ReducedSpectrum& reduced, double delta,
                                int order) {
  if (measure.weights.size() != reduced.actual_dimension()) {
    throw InvalidInput("measure dimension does not match the reduced spectrum");
  }
  Solution s = classify(measure.weights, reduced, delta, order);
  if (s.residual > kResidualLimit) s.classification = Classification::NonPositive;
  s.objective_trace = {s.objective};
  return s;
}

Solution interpolate(const Solution& first, const Solution& second, double t, const ReducedSpectrum& reduced,
                     double delta, int order) {
  if (first.mu.size() != second.mu.size() || first.mu.size() != reduced.actual_dimension()) {
    throw InvalidInput("interpolate: solutions belong to different spectra");
  }
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("interpolate: t must lie in [0, 1]");
  if (t == 0.0) return first;
  std::vector<double> mu(first.mu.size());
  for (std::size_t n = 0; n < mu.size(); ++n) mu[n] = (1.0 - t) * first.mu[n] + t * second.mu[n];
  Solution s = classify(std::move(mu), reduced, delta, order);
  s.objective_trace = {s.objective};
  return s;
}

}  // namespace qae
