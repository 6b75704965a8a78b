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
#include <cstddef>
#include <span>
#include <vector>

#include "qae/spectra.hpp"

namespace qae {

/// Dense row-major matrix.
template <typename T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T{}) {}

  T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<T> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const T> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

using ComplexMatrix = Matrix<std::complex<double>>;
using RealMatrix = Matrix<double>;

enum class MatrixRole { Omega, Psi };

/// Entries e^{-i k kappa_n}, rows k = -L .. L (row index k + L), one column
/// per reduced eigenvalue. Omega holds the first 2L+1 points, Psi the rest.
struct ExponentialMatrix {
  MatrixRole role = MatrixRole::Omega;
  int order = 0;
  std::vector<double> kappas;
  ComplexMatrix entries;
};

struct ExponentialSystem {
  ExponentialMatrix omega;
  ExponentialMatrix psi;
};

/// Canonical LPP (I | A) mu = b. The identity block over the first 2L+1
/// variables is implied; a_struct is (2L+1) x (d - 2L - 1).
struct ReducedSystem {
  int order = 0;
  RealMatrix a_struct;
  std::vector<double> b;

  std::size_t constraints() const { return b.size(); }
  std::size_t structurals() const { return a_struct.cols; }
  std::size_t variables() const { return constraints() + structurals(); }
};

ExponentialMatrix exponential_matrix(std::span<const double> kappas, int order, MatrixRole role);

/// Throws SingularSpectrum when fewer than 2L+1 reduced points exist.
ExponentialSystem build_system(const ReducedSpectrum& reduced, int order);

/// Inverse of Omega through its Vandermonde factorization V = Omega^T omega,
/// omega = Diag(x_n^L), x_n = e^{-i kappa_n}: the master polynomial is formed
/// once, each Lagrange numerator follows by synthetic division, and only the
/// k >= 0 half of every row is computed. The k < 0 half is its conjugate
/// (the inverse of a row-symmetric matrix is column-symmetric), so the whole
/// inverse costs O(L^2).
///
/// Throws IllConditioned when two nodes are closer than 1e-9.
ComplexMatrix parker_invert(const ExponentialMatrix& omega);

/// b = Omega^-1 e_0 and A = Omega^-1 Psi, both real up to rounding. Throws
/// SymmetryViolation when an imaginary part exceeds 1e-8.
ReducedSystem reduce_to_real(const ComplexMatrix& omega_inv, const ExponentialMatrix& psi, int order);

/// build_system -> parker_invert -> reduce_to_real.
ReducedSystem build_reduced_system(const ReducedSpectrum& reduced, int order);

}  // namespace qae
