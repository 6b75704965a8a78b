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

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "qae/kernels.hpp"

namespace qae::kernels {
namespace {

Isa probe_cpu() {
#if defined(QAE_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa initial_isa() {
  const char* force = std::getenv("QAE_FORCE_SCALAR");
  if (force != nullptr && *force != '\0' && *force != '0') return Isa::Scalar;
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

#if !defined(QAE_HAVE_AVX2)
namespace avx2 {
void power_sums(std::span<const std::complex<double>>, std::span<const std::complex<double>>,
                std::span<std::complex<double>>) {
  throw std::logic_error("AVX2 kernels not built");
}
void phase_powers(std::span<const std::complex<double>>, std::size_t,
                  std::span<std::complex<double>>) {
  throw std::logic_error("AVX2 kernels not built");
}
void axpy(double, std::span<const double>, std::span<double>) {
  throw std::logic_error("AVX2 kernels not built");
}
}  // namespace avx2
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = probe_cpu();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
}

void power_sums(std::span<const std::complex<double>> weights,
                std::span<const std::complex<double>> nodes,
                std::span<std::complex<double>> out) {
  if (weights.size() != nodes.size()) throw std::invalid_argument("power_sums: weights and nodes differ in size");
  if (active_isa() == Isa::Avx2) return avx2::power_sums(weights, nodes, out);
  scalar::power_sums(weights, nodes, out);
}

void phase_powers(std::span<const std::complex<double>> nodes, std::size_t rows,
                  std::span<std::complex<double>> out) {
  if (out.size() != rows * nodes.size()) throw std::invalid_argument("phase_powers: output size is not rows * nodes");
  if (active_isa() == Isa::Avx2) return avx2::phase_powers(nodes, rows, out);
  scalar::phase_powers(nodes, rows, out);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
  if (active_isa() == Isa::Avx2) return avx2::axpy(a, x, y);
  scalar::axpy(a, x, y);
}

}  // namespace qae::kernels
