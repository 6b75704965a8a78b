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

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; on x86-64 an AVX2/FMA variant is selected at runtime when
// the CPU supports it. Both variants are tested for equivalence.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qae::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set supported by this build and this CPU.
Isa detected_isa();

/// Instruction set used by the dispatching entry points below. Defaults to
/// detected_isa() unless the QAE_FORCE_SCALAR environment variable is set.
Isa active_isa();

/// Overrides dispatch (tests, benchmarks). Requests above detected_isa() are
/// clamped down to it.
void set_active_isa(Isa isa);

/// out[k] = sum_n weights[n] * nodes[n]^k for k = 0 .. out.size()-1.
void power_sums(std::span<const std::complex<double>> weights,
                std::span<const std::complex<double>> nodes,
                std::span<std::complex<double>> out);

/// Row-major table out[k * nodes.size() + n] = nodes[n]^k for k = 0 .. rows-1.
void phase_powers(std::span<const std::complex<double>> nodes, std::size_t rows,
                  std::span<std::complex<double>> out);

/// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);

// Explicit variants, used by the equivalence tests.
namespace scalar {
void power_sums(std::span<const std::complex<double>> weights,
                std::span<const std::complex<double>> nodes,
                std::span<std::complex<double>> out);
void phase_powers(std::span<const std::complex<double>> nodes, std::size_t rows,
                  std::span<std::complex<double>> out);
void axpy(double a, std::span<const double> x, std::span<double> y);
}  // namespace scalar

namespace avx2 {
// Only callable when detected_isa() == Isa::Avx2.
void power_sums(std::span<const std::complex<double>> weights,
                std::span<const std::complex<double>> nodes,
                std::span<std::complex<double>> out);
void phase_powers(std::span<const std::complex<double>> nodes, std::size_t rows,
                  std::span<std::complex<double>> out);
void axpy(double a, std::span<const double> x, std::span<double> y);
}  // namespace avx2

}  // namespace qae::kernels
