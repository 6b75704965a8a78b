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

#include "properties.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "qae/anticipation.hpp"
#include "qae/common.hpp"
#include "qae/simplex.hpp"
#include "qae/sweep.hpp"

namespace qae::testing {
namespace {

using cd = std::complex<double>;

std::string describe(const char* what, std::size_t cases, double worst) {
  std::ostringstream os;
  os << what << ": " << cases << " cases, worst " << worst;
  return os.str();
}

// Largest, over the grid, of the smallest slack b - A s.
double grid_max_min_slack(const ReducedSystem& system, double spacing) {
  const std::size_t m = system.constraints();
  const std::size_t s = system.structurals();
  const auto min_slack = [&](const std::vector<double>& x) {
    double worst = INFINITY;
    for (std::size_t i = 0; i < m; ++i) {
      double v = system.b[i];
      for (std::size_t j = 0; j < s; ++j) v -= system.a_struct(i, j) * x[j];
      worst = std::min(worst, v);
    }
    return worst;
  };
  const auto steps = static_cast<long>(std::floor(1.0 / spacing + 1e-9));
  std::vector<double> x(s, 0.0);
  if (s == 0) return min_slack(x);
  double best = -INFINITY;
  // Odometer over {x_j = c_j * spacing, sum c_j <= steps}.
  std::vector<long> c(s, 0);
  while (true) {
    for (std::size_t j = 0; j < s; ++j) x[j] = static_cast<double>(c[j]) * spacing;
    best = std::max(best, min_slack(x));
    std::size_t j = 0;
    while (j < s) {
      ++c[j];
      long total = 0;
      for (long v : c) total += v;
      if (total <= steps) break;
      c[j] = 0;
      ++j;
    }
    if (j == s) break;
  }
  return best;
}

double row_abs_max(const ReducedSystem& system) {
  double worst = 0.0;
  for (std::size_t i = 0; i < system.constraints(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < system.structurals(); ++j) sum += std::abs(system.a_struct(i, j));
    worst = std::max(worst, sum);
  }
  return worst;
}

std::vector<double> random_simplex_point(std::mt19937_64& rng, std::size_t n, double scale) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> x(n + 1);
  double sum = 0.0;
  for (auto& v : x) sum += (v = e(rng));
  x.pop_back();
  for (auto& v : x) v = v / sum * scale;
  return x;
}

}  // namespace

std::vector<double> random_kappas(std::mt19937_64& rng, std::size_t n, double min_gap) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<double> out;
  while (out.size() < n) {
    const double k = u(rng);
    bool ok = true;
    for (double v : out) ok = ok && circular_distance(v, k) >= min_gap;
    if (ok) out.push_back(k);
  }
  return out;
}

ReducedSpectrum reduced_from_kappas(const std::vector<double>& kappas) {
  Spectrum s;
  s.eigenvalues = kappas;
  return reduce(s, 1.0);
}

ComplexMatrix dense_inverse(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) e(r, c) = m(r, c);
  }
  const Eigen::MatrixXcd inv = e.partialPivLu().inverse();
  ComplexMatrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = inv(r, c);
  }
  return out;
}

bool grid_feasible(const ReducedSystem& system, double spacing, double slack_tol) {
  return grid_max_min_slack(system, spacing) >= -slack_tol;
}

Report reduction_realness(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, 5);
  std::normal_distribution<double> g(0.0, 1.0);
  Report r;
  for (std::size_t i = 0; i < instances; ++i) {
    const int L = order(rng);
    const std::size_t d = 2 * L + 1 + rng() % 4;
    const auto kappas = random_kappas(rng, d, 0.05);
    const auto m = exponential_matrix(kappas, L, MatrixRole::Omega);
    // Symmetric vector: v_{-k} = conj(v_k), v_0 real.
    std::vector<cd> v(2 * L + 1);
    v[L] = g(rng);
    for (int k = 1; k <= L; ++k) {
      v[L + k] = cd(g(rng), g(rng));
      v[L - k] = std::conj(v[L + k]);
    }
    double norm = 0.0;
    for (const auto& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (std::size_t n = 0; n < d; ++n) {
      cd sum = 0.0;
      for (std::size_t k = 0; k < v.size(); ++k) sum += m.entries(k, n) * v[k];
      r.worst = std::max(r.worst, std::abs(sum.imag()) / norm);
    }
    ++r.cases;
  }
  r.passed = r.worst <= 1e-10;
  r.detail = describe("max |Im(M^T v)| / |v|", r.cases, r.worst);
  return r;
}

Report inverse_column_symmetry(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, 5);
  Report r;
  for (std::size_t i = 0; i < instances; ++i) {
    const int L = order(rng);
    const auto kappas = random_kappas(rng, 2 * L + 1, 0.05);
    const auto omega = exponential_matrix(kappas, L, MatrixRole::Omega);
    const auto inv = parker_invert(omega);
    const auto dense = dense_inverse(omega.entries);
    for (std::size_t n = 0; n < inv.rows; ++n) {
      for (int k = 1; k <= L; ++k) {
        r.worst = std::max(r.worst, std::abs(inv(n, L - k) - std::conj(inv(n, L + k))));
        // The dense inverse has the same structure without being built for it.
        r.worst = std::max(r.worst, std::abs(dense(n, L - k) - std::conj(dense(n, L + k))) /
                                        std::max(1.0, std::abs(dense(n, L + k))));
      }
    }
    ++r.cases;
  }
  r.passed = r.worst <= 1e-10;
  r.detail = describe("max |X(n,-k) - conj X(n,k)|", r.cases, r.worst);
  return r;
}

Report parker_oracle(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, 5);
  Report r;
  double worst_oracle = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const int L = order(rng);
    const auto kappas = random_kappas(rng, 2 * L + 1, 0.05);
    const auto omega = exponential_matrix(kappas, L, MatrixRole::Omega);
    const auto inv = parker_invert(omega);
    const auto dense = dense_inverse(omega.entries);
    const std::size_t m = inv.rows;
    double scale = 0.0;
    for (const auto& x : dense.data) scale = std::max(scale, std::abs(x));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        cd prod = 0.0;
        for (std::size_t c = 0; c < m; ++c) prod += inv(a, c) * omega.entries(c, b);
        r.worst = std::max(r.worst, std::abs(prod - (a == b ? 1.0 : 0.0)));
        worst_oracle = std::max(worst_oracle, std::abs(inv(a, b) - dense(a, b)) / std::max(1.0, scale));
      }
    }
    ++r.cases;
  }
  r.passed = r.worst <= 1e-8 && worst_oracle <= 1e-8;
  std::ostringstream os;
  os << "|X Omega - I|_max " << r.worst << ", |X - dense|/scale " << worst_oracle << " over " << r.cases
     << " instances";
  r.detail = os.str();
  return r;
}

Report simplex_vs_grid(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  Report r;
  std::size_t feasible = 0;
  std::size_t skipped = 0;
  std::size_t disagreements = 0;
  while (r.cases < instances) {
    const std::size_t d = 3 + rng() % 3;
    // Clustered draws keep both outcomes common.
    std::vector<double> kappas = random_kappas(rng, d, 0.05);
    const double span = std::uniform_real_distribution<double>(2.0, kTwoPi)(rng);
    for (auto& k : kappas) k = std::fmod(k, span);
    ReducedSpectrum reduced = reduced_from_kappas(kappas);
    if (reduced.actual_dimension() != d) continue;
    ReducedSystem system;
    try {
      system = build_reduced_system(reduced, 1);
    } catch (const std::exception&) {
      continue;
    }
    const double spacing = d == 5 ? 2e-3 : 1e-3;
    const double margin = std::max(1e-12, row_abs_max(system) * spacing);
    const double best = grid_max_min_slack(system, spacing);
    if (best > -margin && best < margin) {
      ++skipped;  // decided by less than one grid cell
      continue;
    }
    const bool grid = best >= margin;
    bool lp = false;
    if (system.structurals() == 0) {
      lp = std::all_of(system.b.begin(), system.b.end(), [](double v) { return v >= -1e-10; });
    } else {
      lp = simplex_feasible(system).status == LpStatus::Optimal;
    }
    if (lp != grid) ++disagreements;
    if (grid) ++feasible;
    ++r.cases;
  }
  r.passed = disagreements == 0;
  std::ostringstream os;
  os << r.cases << " instances (" << feasible << " feasible), " << disagreements << " disagreements, "
     << skipped << " within one grid cell of the boundary skipped";
  r.detail = os.str();
  return r;
}

Report gradient_vs_finite_differences(std::uint64_t seed, std::size_t points) {
  std::mt19937_64 rng(seed);
  Report r;
  const double h = 1e-6;
  while (r.cases < points) {
    const int L = 1 + static_cast<int>(rng() % 2);
    const std::size_t d = 2 * L + 1 + 2 + rng() % 4;
    const ReducedSpectrum reduced = reduced_from_kappas(random_kappas(rng, d, 0.05));
    ReducedSystem system;
    try {
      system = build_reduced_system(reduced, L);
    } catch (const std::exception&) {
      continue;
    }
    const double delta = std::uniform_real_distribution<double>(-1.5, -0.05)(rng);
    const LookaheadObjective objective(reduced, delta, L);
    const auto s = random_simplex_point(rng, system.structurals(), 0.5);
    const auto g = structural_gradient(system, objective, s);
    double err = 0.0;
    double norm = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto up = s;
      auto down = s;
      up[j] += h;
      down[j] -= h;
      const double fd = (objective.value(full_from_structural(system, up)) -
                         objective.value(full_from_structural(system, down))) /
                        (2 * h);
      err = std::max(err, std::abs(fd - g[j]));
      norm = std::max(norm, std::abs(fd));
    }
    r.worst = std::max(r.worst, err / std::max(norm, 1e-6));
    ++r.cases;
  }
  r.passed = r.worst <= 1e-4;
  r.detail = describe("relative gradient error", r.cases, r.worst);
  return r;
}

namespace {

// Optimum sweeps over random spectra, small and moderate dimensions.
template <typename Visit>
void random_optimum_sweeps(std::uint64_t seed, std::size_t instances, Visit visit) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < instances; ++i) {
    RunConfig c;
    c.order = 1 + static_cast<int>(i % 2);
    c.dimension = static_cast<std::size_t>(2 * c.order + 1) + rng() % 8;
    c.spectrum_kind = i % 3 == 0 ? SpectrumKind::RandomAlternating : SpectrumKind::Random;
    c.seed = rng();
    c.from = 0.0;
    c.to = 4.0;
    c.step_size = 0.02;
    c.location = -std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    const auto run = resolve(c);
    for (const auto& rec : run_continuous(run).series) visit(run, rec);
  }
}

}  // namespace

Report corner_property(std::uint64_t seed, std::size_t instances) {
  Report r;
  std::size_t violations = 0;
  random_optimum_sweeps(seed, instances, [&](const ResolvedRun& run, const StepRecord& rec) {
    if (!rec.flags.positive) return;
    ++r.cases;
    if (rec.nonzero_dimension > 2 * run.config.order + 1) ++violations;
  });
  r.passed = violations == 0 && r.cases > 0;
  std::ostringstream os;
  os << r.cases << " optimum positives, " << violations << " with more than 2L+1 weights above 1e-4";
  r.detail = os.str();
  return r;
}

Report positive_residual(std::uint64_t seed, std::size_t instances) {
  Report r;
  random_optimum_sweeps(seed, instances, [&](const ResolvedRun&, const StepRecord& rec) {
    if (!rec.flags.positive) return;
    ++r.cases;
    r.worst = std::max(r.worst, rec.residual);
  });
  // Fixed measures go through the same classification.
  for (auto kind : {MeasureKind::Equal, MeasureKind::Random}) {
    RunConfig c;
    c.spectrum_kind = SpectrumKind::Equidistant;
    c.dimension = 6;
    c.order = 2;
    c.measure_kind = kind;
    c.seed = seed;
    c.to = 10.0;
    c.step_size = 0.05;
    for (const auto& rec : run_continuous(resolve(c)).series) {
      if (!rec.flags.positive) continue;
      ++r.cases;
      r.worst = std::max(r.worst, rec.residual);
    }
  }
  r.passed = r.worst <= kResidualLimit && r.cases > 0;
  r.detail = describe("residual of reported positives", r.cases, r.worst);
  return r;
}

Report interpolation_residual(std::uint64_t seed, std::size_t instances) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Report r;
  std::size_t attempts = 0;
  bool wide = false;
  while (r.cases < instances && attempts < 100 * instances) {
    ++attempts;
    const std::size_t d = 5 + rng() % 3;
    const ReducedSpectrum reduced = reduced_from_kappas(random_kappas(rng, d, 0.05));
    ReducedSystem system;
    try {
      system = build_reduced_system(reduced, 1);
    } catch (const std::exception&) {
      continue;
    }
    const double delta = -0.5;
    std::vector<Solution> corners;
    for (int c = 0; c < 2; ++c) {
      CanonicalSimplex simplex(system);
      if (simplex.find_feasible() != LpStatus::Optimal) break;
      std::vector<double> cost(system.variables());
      for (auto& v : cost) v = u(rng) - 0.5;
      if (simplex.maximize(cost) != LpStatus::Optimal) break;
      corners.push_back(classify(simplex.solution(), reduced, delta, 1));
    }
    if (corners.size() != 2 || !corners[0].positive() || !corners[1].positive()) continue;
    if (corners[0].mu == corners[1].mu) continue;
    for (double t : {0.0, 0.5, u(rng), 1.0}) {
      const Solution mix = interpolate(corners[0], corners[1], t, reduced, delta, 1);
      const double bound = std::max(corners[0].residual, corners[1].residual) + 1e-12;
      r.worst = std::max(r.worst, mix.residual - bound);
      if (mix.nonzero_dimension > 3) wide = true;
      if (!mix.positive()) r.passed = false;
    }
    ++r.cases;
  }
  r.passed = r.passed && r.worst <= 0.0 && r.cases == instances && wide;
  std::ostringstream os;
  os << r.cases << " corner pairs, residual excess " << r.worst
     << (wide ? ", mixtures above 2L+1 non-zero weights seen" : ", no mixture exceeded 2L+1 weights");
  r.detail = os.str();
  return r;
}

Report order2_bin_majority() {
  RunConfig c;
  c.order = 2;
  c.dimension = 11;
  c.from = 0.0;
  c.to = 72.0;
  c.step_size = 0.01;
  c.threads = 0;
  const auto result = run_continuous(resolve(c));
  Report r;
  r.cases = result.stats.positive;
  const auto& bins = result.stats.lookahead_bins;
  const double total = static_cast<double>(bins[0] + bins[1]);
  r.passed = total > 0 && bins[1] > bins[0];
  std::ostringstream os;
  os << "order 2, d 11: bin [0,1) " << (total > 0 ? bins[0] / total : 0.0) << ", bin [1,2) "
     << (total > 0 ? bins[1] / total : 0.0) << " of " << r.cases << " positives";
  r.detail = os.str();
  return r;
}

}  // namespace qae::testing
