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

// Compiled with -mavx2 -mfma; only reached through dispatch after a CPU check.

#include <immintrin.h>

#include <complex>
#include <vector>

#include "qae/kernels.hpp"

namespace qae::kernels::avx2 {
namespace {

// Two interleaved complex products (re0, im0, re1, im1).
inline __m256d complex_mul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

inline std::complex<double> horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double buf[2];
  _mm_store_pd(buf, s);
  return {buf[0], buf[1]};
}

}  // namespace

void power_sums(std::span<const std::complex<double>> weights,
                std::span<const std::complex<double>> nodes,
                std::span<std::complex<double>> out) {
  const std::size_t count = weights.size();
  const std::size_t paired = count & ~std::size_t{1};
  std::vector<std::complex<double>> terms(weights.begin(), weights.end());
  auto* t = reinterpret_cast<double*>(terms.data());
  const auto* z = reinterpret_cast<const double*>(nodes.data());

  for (auto& sum : out) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t n = 0; n < paired; n += 2) {
      const __m256d term = _mm256_loadu_pd(t + 2 * n);
      acc = _mm256_add_pd(acc, term);
      _mm256_storeu_pd(t + 2 * n, complex_mul(term, _mm256_loadu_pd(z + 2 * n)));
    }
    std::complex<double> total = horizontal_sum(acc);
    if (paired < count) {
      total += terms[paired];
      terms[paired] *= nodes[paired];
    }
    sum = total;
  }
}

void phase_powers(std::span<const std::complex<double>> nodes, std::size_t rows,
                  std::span<std::complex<double>> out) {
  const std::size_t cols = nodes.size();
  if (rows == 0) return;
  const std::size_t paired = cols & ~std::size_t{1};
  for (std::size_t n = 0; n < cols; ++n) out[n] = {1.0, 0.0};
  const auto* z = reinterpret_cast<const double*>(nodes.data());
  for (std::size_t k = 1; k < rows; ++k) {
    const auto* prev = reinterpret_cast<const double*>(out.data() + (k - 1) * cols);
    auto* row = reinterpret_cast<double*>(out.data() + k * cols);
    for (std::size_t n = 0; n < paired; n += 2) {
      _mm256_storeu_pd(row + 2 * n,
                       complex_mul(_mm256_loadu_pd(prev + 2 * n), _mm256_loadu_pd(z + 2 * n)));
    }
    if (paired < cols) {
      out[k * cols + paired] = out[(k - 1) * cols + paired] * nodes[paired];
    }
  }
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::size_t count = y.size();
  const std::size_t blocked = count & ~std::size_t{3};
  const __m256d factor = _mm256_set1_pd(a);
  for (std::size_t i = 0; i < blocked; i += 4) {
    const __m256d yi = _mm256_loadu_pd(y.data() + i);
    _mm256_storeu_pd(y.data() + i, _mm256_fmadd_pd(factor, _mm256_loadu_pd(x.data() + i), yi));
  }
  for (std::size_t i = blocked; i < count; ++i) y[i] += a * x[i];
}

}  // namespace qae::kernels::avx2
