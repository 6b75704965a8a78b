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

#include <cstddef>
#include <span>
#include <vector>

#include "qae/vandermonde.hpp"

namespace qae {

enum class LpStatus { Optimal, Infeasible, Unbounded, CycleLimit };

/// Dense tableau simplex over the canonical system (I | A) mu = b, mu >= 0.
/// Phase 1 adds artificials only for rows with b_i < 0 (after flipping them);
/// all other rows start with their slack in the basis. Pricing is Dantzig's
/// largest coefficient, switching to Bland's rule after 3 m consecutive
/// degenerate pivots.
class CanonicalSimplex {
 public:
  explicit CanonicalSimplex(const ReducedSystem& system);

  /// Phase 1. On Optimal the tableau holds a feasible basis.
  LpStatus find_feasible();

  /// Phase 2 from the current (feasible) basis: maximize cost . mu.
  LpStatus maximize(std::span<const double> cost);

  /// Basic solution, tiny negative rounding clamped to 0.
  std::vector<double> solution() const;
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::size_t pivots() const { return pivots_; }
  std::size_t variables() const { return variables_; }

 private:
  LpStatus run(std::span<const double> cost, std::size_t columns);
  void pivot(std::size_t row, std::size_t col);
  double rhs(std::size_t row) const { return tableau_(row, tableau_.cols - 1); }

  std::size_t rows_;
  std::size_t variables_;
  std::size_t artificials_ = 0;
  RealMatrix tableau_;  // rows_ x (variables_ + artificials_ + 1)
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
  bool feasible_ = false;
};

}  // namespace qae
