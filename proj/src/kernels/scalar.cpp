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

#include <complex>
#include <vector>

#include "qae/kernels.hpp"

namespace qae::kernels::scalar {

void power_sums(std::span<const std::complex<double>> weights,
                std::span<const std::complex<double>> nodes,
                std::span<std::complex<double>> out) {
  std::vector<std::complex<double>> terms(weights.begin(), weights.end());
  for (auto& sum : out) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < terms.size(); ++n) {
      acc += terms[n];
      terms[n] *= nodes[n];
    }
    sum = acc;
  }
}

void phase_powers(std::span<const std::complex<double>> nodes, std::size_t rows,
                  std::span<std::complex<double>> out) {
  const std::size_t cols = nodes.size();
  if (rows == 0) return;
  for (std::size_t n = 0; n < cols; ++n) out[n] = {1.0, 0.0};
  for (std::size_t k = 1; k < rows; ++k) {
    const auto* prev = out.data() + (k - 1) * cols;
    auto* row = out.data() + k * cols;
    for (std::size_t n = 0; n < cols; ++n) row[n] = prev[n] * nodes[n];
  }
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

}  // namespace qae::kernels::scalar
