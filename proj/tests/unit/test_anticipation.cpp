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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "properties.hpp"
#include "qae/anticipation.hpp"
#include "qae/common.hpp"

using namespace qae;
using cd = std::complex<double>;

namespace {

Spectrum from_values(std::vector<double> values) {
  Spectrum s;
  s.eigenvalues = std::move(values);
  return s;
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& v : w) sum += (v = std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  for (auto& v : w) v /= sum;
  return w;
}

}  // namespace

TEST_CASE("a solution at location 0 gives the Kronecker amplitudes") {
  const auto r = reduce(generate_spectrum(SpectrumKind::Equidistant, 3), 1.0);
  const auto a = amplitudes(r, std::vector<double>(3, 1.0 / 3), 0.0, 1);
  CHECK(std::abs(a.alpha(0) - 1.0) <= 1e-12);
  CHECK(std::abs(a.alpha(1)) <= 1e-12);
  CHECK(std::abs(a.alpha(-1)) <= 1e-12);
  CHECK(a.total_prob == doctest::Approx(1.0));
  CHECK(std::abs(a.lookahead) <= 1e-12);
}

TEST_CASE("a point mass has unit amplitudes") {
  const auto r = reduce(from_values({0.0, 1.0, 2.5}), 1.0);
  std::vector<double> w(3, 0.0);
  w[r.origin_map[0]] = 1.0;
  for (int L : {1, 2, 3}) {
    const auto a = amplitudes(r, w, 0.0, L);
    for (int k = -L; k <= L; ++k) CHECK(std::abs(std::abs(a.alpha(k)) - 1.0) <= 1e-12);
    CHECK(a.total_prob == doctest::Approx(L + 1.0));
  }
}

TEST_CASE("look-ahead bins") {
  CHECK(lookahead_bin(0.0, 1) == 0);
  CHECK(lookahead_bin(1.49, 2) == 1);
  CHECK(lookahead_bin(-0.2, 2) == 0);
  CHECK(lookahead_bin(2.0, 2) == 1);
  CHECK(lookahead_bin(7.5, 3) == 2);
  CHECK(lookahead_bin(1.49, 1) == 0);
}

TEST_CASE("amplitude identities") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int L = 1 + trial % 3;
    const std::size_t d = 3 + rng() % 6;
    Spectrum s;
    s.eigenvalues = qae::testing::random_kappas(rng, d, 0.01);
    for (auto& v : s.eigenvalues) v = v * 3.0 - 7.0;  // spread over several turns
    const double T = std::uniform_real_distribution<double>(0.3, 3.0)(rng);
    const auto r = reduce(s, T);
    const auto w = random_weights(rng, r.actual_dimension());
    const double delta = -std::uniform_real_distribution<double>(0.0, 1.5)(rng);

    const auto a = amplitudes(r, w, delta, L);
    // Direct evaluation on lambda T of each surviving point.
    for (int k = -L; k <= L; ++k) {
      cd direct = 0.0;
      for (std::size_t n = 0; n < w.size(); ++n) direct += w[n] * std::polar(1.0, -(k - delta) * r.phases[n]);
      CHECK(std::abs(a.alpha(k) - direct) <= 1e-12);
      CHECK(a.prob(k) <= 1.0 + 1e-9);
    }
    double lookahead = 0.0, total = 0.0, expectation = 0.0;
    for (int k = 0; k <= L; ++k) {
      lookahead += (k - delta) * a.prob(k);
      total += a.prob(k);
      expectation += k * a.prob(k);
    }
    CHECK(a.lookahead == doctest::Approx(lookahead).epsilon(1e-12));
    CHECK(a.total_prob == doctest::Approx(total).epsilon(1e-12));
    CHECK(a.lookahead == doctest::Approx(expectation - total * delta).epsilon(1e-12));
    CHECK(a.lookahead >= 0.0);

    // Location 0: Hermitian symmetry, and P does not see a common rotation.
    const auto a0 = amplitudes(r, w, 0.0, L);
    for (int k = 1; k <= L; ++k) CHECK(std::abs(a0.alpha(-k) - std::conj(a0.alpha(k))) <= 1e-12);
    Spectrum shifted = s;
    for (auto& v : shifted.eigenvalues) v += 0.7 / T;
    const auto rs = reduce(shifted, T);
    if (rs.actual_dimension() == r.actual_dimension() && rs.representatives == r.representatives) {
      CHECK(amplitudes(rs, w, 0.0, L).total_prob == doctest::Approx(a0.total_prob).epsilon(1e-10));
    }

    const LookaheadObjective objective(r, delta, L);
    CHECK(objective.value(w) == doctest::Approx(a.lookahead).epsilon(1e-12));
  }
}

TEST_CASE("the fractional location sees the unreduced phase") {
  // Same reduced point, phases one turn apart.
  const auto near = reduce(from_values({0.5, 2.0}), 1.0);
  const auto far = reduce(from_values({0.5 + kTwoPi, 2.0}), 1.0);
  const std::vector<double> w{0.5, 0.5};
  CHECK(circular_distance(near.kappas[near.origin_map[0]], far.kappas[far.origin_map[0]]) <= 1e-12);
  const auto a = amplitudes(near, w, -0.5, 1);
  const auto b = amplitudes(far, w, -0.5, 1);
  CHECK(std::abs(amplitudes(near, w, -1.0, 1).alpha(1) - amplitudes(far, w, -1.0, 1).alpha(1)) <= 1e-12);
  CHECK(std::abs(a.alpha(0) - b.alpha(0)) > 0.1);
}

TEST_CASE("objective gradient") {
  std::mt19937_64 rng(52);
  const auto r = qae::testing::reduced_from_kappas(qae::testing::random_kappas(rng, 6, 0.05));
  const LookaheadObjective objective(r, -0.5, 2);
  const auto w = random_weights(rng, 6);
  const auto g = objective.gradient(w);
  for (std::size_t n = 0; n < w.size(); ++n) {
    auto up = w, down = w;
    up[n] += 1e-6;
    down[n] -= 1e-6;
    const double fd = (objective.value(up) - objective.value(down)) / 2e-6;
    CHECK(g[n] == doctest::Approx(fd).epsilon(1e-6));
  }
  const auto report = qae::testing::gradient_vs_finite_differences(53, 100);
  INFO(report.detail);
  CHECK(report.passed);
}
