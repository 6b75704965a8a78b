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
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace qae {

enum class SpectrumKind {
  HAtom,
  Equidistant,
  EquidistantAlternating,
  Random,
  RandomAlternating,
  Prescribed,
};

std::string_view to_string(SpectrumKind kind);
/// Accepts the CLI/JSON spellings: h-atom, equidistant, equidistant-alternating,
/// random, random-alternating, prescribed.
SpectrumKind parse_spectrum_kind(std::string_view name);

/// A point spectrum of d mutually distinct eigenvalues (angular frequencies).
struct Spectrum {
  std::vector<double> eigenvalues;
  SpectrumKind kind = SpectrumKind::Prescribed;
  std::optional<std::uint64_t> seed;

  std::size_t dimension() const { return eigenvalues.size(); }
};

/// Non-negative weights over the original eigenvalues, summing to one.
struct SpectralMeasure {
  std::vector<double> weights;

  std::size_t dimension() const { return weights.size(); }
};

/// Builds one of the generated spectrum kinds. Random kinds draw a seed when
/// none is given; the seed used is stored in the result.
Spectrum generate_spectrum(SpectrumKind kind, std::size_t dimension,
                           std::optional<std::uint64_t> seed = std::nullopt);

/// Checks d >= 2 and pairwise distinct eigenvalues.
void validate_spectrum(const Spectrum& spectrum);
/// Checks non-negativity and |sum - 1| <= 1e-10.
void validate_measure(const SpectralMeasure& measure);

/// Splits on spaces, commas and tabs (any mix, repeated separators allowed).
/// Numbers use the C locale. Throws InvalidInput on a malformed token.
std::vector<double> parse_values(std::string_view text);

Spectrum parse_prescribed_spectrum(std::string_view text, std::size_t dimension);
SpectralMeasure parse_prescribed_measure(std::string_view text, std::size_t dimension);

SpectralMeasure equal_measure(std::size_t dimension);
/// d uniform draws in [0, 1) normalized to unit sum.
SpectralMeasure random_measure(std::size_t dimension, std::mt19937_64& rng);

/// The spectrum reduced modulo 2 pi at a fixed time, after degeneracy cleanup
/// and conditioning reorder. Index i of kappas/phases/representatives is the
/// i-th surviving point in conditioning order.
struct ReducedSpectrum {
  double time = 0.0;
  std::vector<double> kappas;
  // lambda * T of the representative eigenvalue, not reduced.
  std::vector<double> phases;
  std::vector<std::size_t> representatives;
  // original index -> reduced index
  std::vector<std::size_t> origin_map;
  // position -> surviving point in original order
  std::vector<std::size_t> permutation;
  bool degenerate = false;

  std::size_t actual_dimension() const { return kappas.size(); }
  std::size_t original_dimension() const { return origin_map.size(); }
};

struct ReducedMeasure {
  std::vector<double> weights;
};

/// x mod 2 pi in [0, 2 pi).
double reduce_phase(double phase);
/// Maps a reduced phase to the display range [-pi, pi).
double display_position(double kappa);

ReducedSpectrum reduce(const Spectrum& spectrum, double time);

/// Farthest-point ordering on the circle, starting at the first point: every
/// next point maximizes its distance to those already placed. Ties go to the
/// lower index.
std::vector<std::size_t> conditioning_order(std::span<const double> kappas);

/// Largest gap between circle-adjacent points; 2 pi for a single point.
double spectral_width(std::span<const double> kappas);
double spectral_width(const ReducedSpectrum& reduced);

/// Width test applied before solving: for order 1, width <= pi at T; for
/// higher orders, width <= 2 pi / (L + 1) at every n T, n = 1 .. L.
/// An order 0 problem is never narrow.
bool is_non_narrow(const Spectrum& spectrum, const ReducedSpectrum& reduced, int order);

/// True when the sorted circular gaps are all equal within tolerance.
bool is_equidistant(const ReducedSpectrum& reduced, double tolerance = 1.0e-6);

ReducedMeasure reduce_measure(const SpectralMeasure& measure, const ReducedSpectrum& reduced);

/// pi^-1 sqrt(sum nu (kappa - mean)^2), kappa taken in [-pi, pi).
double variance(const ReducedSpectrum& reduced, const ReducedMeasure& measure);

}  // namespace qae
