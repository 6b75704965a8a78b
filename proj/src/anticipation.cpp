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

#include "qae/anticipation.hpp"

#include <algorithm>
#include <cmath>

#include "qae/common.hpp"
#include "qae/kernels.hpp"

namespace qae {

AnticipationResult amplitudes(const ReducedSpectrum& reduced, std::span<const double> weights,
                              double delta, int order) {
  const std::size_t count = reduced.actual_dimension();
  if (weights.size() != count) throw InvalidInput("amplitudes: measure dimension mismatch");
  const auto L = static_cast<std::size_t>(order);

  std::vector<std::complex<double>> shifted(count);
  std::vector<std::complex<double>> forward(count);
  std::vector<std::complex<double>> backward(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double phi = reduced.phases[n];
    shifted[n] = weights[n] * std::polar(1.0, delta * phi);
    forward[n] = std::polar(1.0, -phi);
    backward[n] = std::conj(forward[n]);
  }
  std::vector<std::complex<double>> upper(L + 1);
  std::vector<std::complex<double>> lower(L + 1);
  kernels::power_sums(shifted, forward, upper);
  kernels::power_sums(shifted, backward, lower);

  AnticipationResult result;
  result.order = order;
  result.delta = delta;
  result.alphas.resize(2 * L + 1);
  result.probs.resize(2 * L + 1);
  for (std::size_t k = 0; k <= L; ++k) {
    result.alphas[L + k] = upper[k];
    result.alphas[L - k] = lower[k];
  }
  for (std::size_t i = 0; i < result.alphas.size(); ++i) result.probs[i] = std::norm(result.alphas[i]);
  for (std::size_t k = 0; k <= L; ++k) {
    const double p = result.probs[L + k];
    result.total_prob += p;
    result.lookahead += (static_cast<double>(k) - delta) * p;
  }
  return result;
}

int lookahead_bin(double lookahead, int order) {
  const double upper = static_cast<double>(order) - 1.0e-12;
  const double clamped = std::clamp(lookahead, 0.0, std::max(upper, 0.0));
  return static_cast<int>(std::floor(clamped));
}

LookaheadObjective::LookaheadObjective(const ReducedSpectrum& reduced, double delta, int order)
    : order_(order), delta_(delta), dimension_(reduced.actual_dimension()) {
  const auto rows = static_cast<std::size_t>(order) + 1;
  std::vector<std::complex<double>> nodes(dimension_);
  for (std::size_t n = 0; n < dimension_; ++n) nodes[n] = std::polar(1.0, -reduced.phases[n]);
  coefficients_.resize(rows * dimension_);
  kernels::phase_powers(nodes, rows, coefficients_);
  for (std::size_t n = 0; n < dimension_; ++n) {
    const auto shift = std::polar(1.0, delta * reduced.phases[n]);
    for (std::size_t k = 0; k < rows; ++k) coefficients_[k * dimension_ + n] *= shift;
  }
}

std::vector<std::complex<double>> LookaheadObjective::amplitudes(std::span<const double> mu) const {
  const auto rows = static_cast<std::size_t>(order_) + 1;
  std::vector<std::complex<double>> alpha(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    std::complex<double> acc{0.0, 0.0};
    const auto* c = coefficients_.data() + k * dimension_;
    for (std::size_t n = 0; n < dimension_; ++n) acc += mu[n] * c[n];
    alpha[k] = acc;
  }
  return alpha;
}

double LookaheadObjective::value(std::span<const double> mu) const {
  const auto alpha = amplitudes(mu);
  double total = 0.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    total += (static_cast<double>(k) - delta_) * std::norm(alpha[k]);
  }
  return total;
}

std::vector<double> LookaheadObjective::gradient(std::span<const double> mu) const {
  const auto alpha = amplitudes(mu);
  std::vector<double> grad(dimension_, 0.0);
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    const double w = 2.0 * (static_cast<double>(k) - delta_);
    const auto a = std::conj(alpha[k]);
    const auto* c = coefficients_.data() + k * dimension_;
    for (std::size_t n = 0; n < dimension_; ++n) grad[n] += w * (a * c[n]).real();
  }
  return grad;
}

std::vector<double> full_from_structural(const ReducedSystem& system, std::span<const double> structural) {
  const std::size_t m = system.constraints();
  std::vector<double> mu(system.variables());
  for (std::size_t i = 0; i < m; ++i) {
    double slack = system.b[i];
    for (std::size_t j = 0; j < structural.size(); ++j) slack -= system.a_struct(i, j) * structural[j];
    mu[i] = slack;
  }
  std::copy(structural.begin(), structural.end(), mu.begin() + static_cast<std::ptrdiff_t>(m));
  return mu;
}

std::vector<double> structural_gradient(const ReducedSystem& system, const LookaheadObjective& objective,
                                        std::span<const double> structural) {
  const auto mu = full_from_structural(system, structural);
  const auto grad = objective.gradient(mu);
  const std::size_t m = system.constraints();
  std::vector<double> out(structural.size());
  for (std::size_t j = 0; j < structural.size(); ++j) {
    double g = grad[m + j];
    for (std::size_t i = 0; i < m; ++i) g -= grad[i] * system.a_struct(i, j);
    out[j] = g;
  }
  return out;
}

}  // namespace qae
