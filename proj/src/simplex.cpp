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

#include "qae/simplex.hpp"

#include <algorithm>
#include <cmath>

#include "qae/common.hpp"
#include "qae/kernels.hpp"

namespace qae {
namespace {

constexpr double kPricingTolerance = 1.0e-11;
constexpr double kPivotTolerance = 1.0e-11;
constexpr double kPhaseOneTolerance = 1.0e-9;

}  // namespace

CanonicalSimplex::CanonicalSimplex(const ReducedSystem& system)
    : rows_(system.constraints()), variables_(system.variables()) {
  for (double v : system.b) {
    if (v < 0.0) ++artificials_;
  }
  tableau_ = RealMatrix(rows_, variables_ + artificials_ + 1);
  basis_.resize(rows_);
  std::size_t next_artificial = variables_;
  for (std::size_t i = 0; i < rows_; ++i) {
    const double sign = system.b[i] < 0.0 ? -1.0 : 1.0;
    tableau_(i, i) = sign;
    for (std::size_t j = 0; j < system.structurals(); ++j) {
      tableau_(i, rows_ + j) = sign * system.a_struct(i, j);
    }
    tableau_(i, tableau_.cols - 1) = sign * system.b[i];
    if (sign < 0.0) {
      tableau_(i, next_artificial) = 1.0;
      basis_[i] = next_artificial++;
    } else {
      basis_[i] = i;
    }
  }
  feasible_ = artificials_ == 0;
}

void CanonicalSimplex::pivot(std::size_t row, std::size_t col) {
  auto pivot_row = tableau_.row(row);
  const double scale = 1.0 / pivot_row[col];
  for (auto& v : pivot_row) v *= scale;
  pivot_row[col] = 1.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == row) continue;
    const double factor = tableau_(i, col);
    if (factor == 0.0) continue;
    kernels::axpy(-factor, pivot_row, tableau_.row(i));
    tableau_(i, col) = 0.0;
  }
  basis_[row] = col;
  ++pivots_;
}

LpStatus CanonicalSimplex::run(std::span<const double> cost, std::size_t columns) {
  const std::size_t max_pivots = 50 * (rows_ + columns) + 200;
  const std::size_t bland_after = 3 * rows_;
  std::size_t degenerate_streak = 0;
  std::vector<double> reduced_cost(columns);

  for (std::size_t iteration = 0; iteration < max_pivots; ++iteration) {
    for (std::size_t j = 0; j < columns; ++j) {
      double r = cost[j];
      for (std::size_t i = 0; i < rows_; ++i) r -= cost[basis_[i]] * tableau_(i, j);
      reduced_cost[j] = r;
    }
    for (std::size_t i = 0; i < rows_; ++i) reduced_cost[basis_[i]] = 0.0;

    const bool bland = degenerate_streak >= bland_after;
    std::size_t entering = columns;
    for (std::size_t j = 0; j < columns; ++j) {
      if (reduced_cost[j] <= kPricingTolerance) continue;
      if (entering == columns || (!bland && reduced_cost[j] > reduced_cost[entering])) entering = j;
      if (bland) break;
    }
    if (entering == columns) return LpStatus::Optimal;

    std::size_t leaving = rows_;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double a = tableau_(i, entering);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(rhs(i), 0.0) / a;
      if (leaving == rows_ || ratio < best_ratio - 1.0e-14 ||
          (std::abs(ratio - best_ratio) <= 1.0e-14 && basis_[i] < basis_[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == rows_) return LpStatus::Unbounded;

    degenerate_streak = best_ratio <= 1.0e-14 ? degenerate_streak + 1 : 0;
    pivot(leaving, entering);
  }
  return LpStatus::CycleLimit;
}

LpStatus CanonicalSimplex::find_feasible() {
  if (feasible_) return LpStatus::Optimal;
  const std::size_t columns = variables_ + artificials_;
  std::vector<double> cost(columns, 0.0);
  for (std::size_t j = variables_; j < columns; ++j) cost[j] = -1.0;
  const LpStatus status = run(cost, columns);
  if (status != LpStatus::Optimal) return status;

  double infeasibility = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] >= variables_) infeasibility += std::max(rhs(i), 0.0);
  }
  if (infeasibility > kPhaseOneTolerance) return LpStatus::Infeasible;

  // Drive remaining (zero-level) artificials out of the basis.
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] < variables_) continue;
    std::size_t best = variables_;
    for (std::size_t j = 0; j < variables_; ++j) {
      if (std::abs(tableau_(i, j)) > 1.0e-9 &&
          (best == variables_ || std::abs(tableau_(i, j)) > std::abs(tableau_(i, best)))) {
        best = j;
      }
    }
    if (best == variables_) return LpStatus::Infeasible;
    pivot(i, best);
  }

  RealMatrix trimmed(rows_, variables_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < variables_; ++j) trimmed(i, j) = tableau_(i, j);
    trimmed(i, variables_) = std::max(rhs(i), 0.0);
  }
  tableau_ = std::move(trimmed);
  artificials_ = 0;
  feasible_ = true;
  return LpStatus::Optimal;
}

LpStatus CanonicalSimplex::maximize(std::span<const double> cost) {
  if (!feasible_) {
    const LpStatus status = find_feasible();
    if (status != LpStatus::Optimal) return status;
  }
  if (cost.size() != variables_) throw InvalidInput("simplex cost has the wrong dimension");
  return run(cost, variables_);
}

std::vector<double> CanonicalSimplex::solution() const {
  std::vector<double> x(variables_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] < variables_) x[basis_[i]] = std::max(rhs(i), 0.0);
  }
  return x;
}

}  // namespace qae
