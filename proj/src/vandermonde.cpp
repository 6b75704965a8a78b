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

#include "qae/vandermonde.hpp"

#include <cmath>
#include <string>

#include "qae/common.hpp"
#include "qae/kernels.hpp"

namespace qae {
namespace {

constexpr double kNodeSeparation = 1.0e-9;
constexpr double kImaginaryResidue = 1.0e-8;

std::vector<std::complex<double>> unit_nodes(std::span<const double> kappas) {
  std::vector<std::complex<double>> nodes(kappas.size());
  for (std::size_t n = 0; n < kappas.size(); ++n) nodes[n] = std::polar(1.0, -kappas[n]);
  return nodes;
}

}  // namespace

ExponentialMatrix exponential_matrix(std::span<const double> kappas, int order, MatrixRole role) {
  const auto L = static_cast<std::size_t>(order);
  const std::size_t cols = kappas.size();
  ExponentialMatrix m;
  m.role = role;
  m.order = order;
  m.kappas.assign(kappas.begin(), kappas.end());
  m.entries = ComplexMatrix(2 * L + 1, cols);
  if (cols == 0) return m;

  const auto nodes = unit_nodes(kappas);
  std::vector<std::complex<double>> powers((L + 1) * cols);
  kernels::phase_powers(nodes, L + 1, powers);
  for (std::size_t k = 0; k <= L; ++k) {
    for (std::size_t n = 0; n < cols; ++n) {
      const auto z = powers[k * cols + n];
      m.entries(L + k, n) = z;
      m.entries(L - k, n) = std::conj(z);
    }
  }
  return m;
}

ExponentialSystem build_system(const ReducedSpectrum& reduced, int order) {
  const std::size_t minimum = 2 * static_cast<std::size_t>(order) + 1;
  if (reduced.actual_dimension() < minimum) {
    throw SingularSpectrum("the spectrum is singular: actual dimension " +
                           std::to_string(reduced.actual_dimension()) + " < 2L+1 = " +
                           std::to_string(minimum));
  }
  std::span<const double> all(reduced.kappas);
  return ExponentialSystem{
      exponential_matrix(all.first(minimum), order, MatrixRole::Omega),
      exponential_matrix(all.subspan(minimum), order, MatrixRole::Psi),
  };
}

ComplexMatrix parker_invert(const ExponentialMatrix& omega) {
  const auto L = static_cast<std::size_t>(omega.order);
  const std::size_t size = 2 * L + 1;
  if (omega.kappas.size() != size) {
    throw InvalidInput("Omega must be square with 2L+1 columns");
  }
  const auto nodes = unit_nodes(omega.kappas);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t m = n + 1; m < size; ++m) {
      if (std::abs(nodes[n] - nodes[m]) < kNodeSeparation) {
        throw IllConditioned("Vandermonde nodes " + std::to_string(n) + " and " +
                             std::to_string(m) + " coincide");
      }
    }
  }

  // master[j] is the coefficient of x^j in prod_m (x - x_m).
  std::vector<std::complex<double>> master(size + 1, {0.0, 0.0});
  master[0] = {1.0, 0.0};
  for (std::size_t m = 0; m < size; ++m) {
    for (std::size_t j = m + 1; j > 0; --j) master[j] = master[j - 1] - nodes[m] * master[j];
    master[0] = -nodes[m] * master[0];
  }

  ComplexMatrix inverse(size, size);
  std::vector<std::complex<double>> quotient(size);
  for (std::size_t n = 0; n < size; ++n) {
    const auto x = nodes[n];
    std::complex<double> denominator{1.0, 0.0};
    for (std::size_t m = 0; m < size; ++m) {
      if (m != n) denominator *= x - nodes[m];
    }
    // Synthetic division from the top; coefficients 2L .. L are the k >= 0 half.
    quotient[size - 1] = {1.0, 0.0};
    for (std::size_t j = size - 1; j > L; --j) quotient[j - 1] = master[j] + x * quotient[j];

    const auto scale = std::pow(x, static_cast<int>(L)) / denominator;
    for (std::size_t k = 0; k <= L; ++k) {
      const auto entry = quotient[L + k] * scale;
      inverse(n, L + k) = entry;
      if (k > 0) inverse(n, L - k) = std::conj(entry);
    }
  }
  return inverse;
}

ReducedSystem reduce_to_real(const ComplexMatrix& omega_inv, const ExponentialMatrix& psi, int order) {
  const auto L = static_cast<std::size_t>(order);
  const std::size_t size = 2 * L + 1;
  if (omega_inv.rows != size || omega_inv.cols != size || psi.entries.rows != size) {
    throw InvalidInput("reduce_to_real: shape mismatch");
  }
  const auto check = [](std::complex<double> v, const char* what) {
    if (std::abs(v.imag()) > kImaginaryResidue) {
      throw SymmetryViolation(std::string("imaginary residue in ") + what + ": " +
                              std::to_string(v.imag()));
    }
    return v.real();
  };

  ReducedSystem system;
  system.order = order;
  system.b.resize(size);
  for (std::size_t n = 0; n < size; ++n) system.b[n] = check(omega_inv(n, L), "b");

  const std::size_t structurals = psi.entries.cols;
  system.a_struct = RealMatrix(size, structurals);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t j = 0; j < structurals; ++j) {
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t r = 0; r < size; ++r) acc += omega_inv(n, r) * psi.entries(r, j);
      system.a_struct(n, j) = check(acc, "A");
    }
  }
  return system;
}

ReducedSystem build_reduced_system(const ReducedSpectrum& reduced, int order) {
  const auto system = build_system(reduced, order);
  const auto inverse = parker_invert(system.omega);
  return reduce_to_real(inverse, system.psi, order);
}

}  // namespace qae
