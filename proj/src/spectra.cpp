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

#include "qae/spectra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "qae/common.hpp"

namespace qae {
namespace {

std::uint64_t fresh_seed() {
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

// Uniform draw in [lo, hi) that keeps 1e-12 away from earlier draws.
double draw_distinct(std::mt19937_64& rng, double lo, double hi, const std::vector<double>& taken) {
  std::uniform_real_distribution<double> dist(lo, hi);
  for (;;) {
    const double value = dist(rng);
    const bool collides = std::any_of(taken.begin(), taken.end(),
                                      [&](double v) { return std::abs(v - value) < 1.0e-12; });
    if (!collides) return value;
  }
}

}  // namespace

std::string_view to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::HAtom:
      return "h-atom";
    case SpectrumKind::Equidistant:
      return "equidistant";
    case SpectrumKind::EquidistantAlternating:
      return "equidistant-alternating";
    case SpectrumKind::Random:
      return "random";
    case SpectrumKind::RandomAlternating:
      return "random-alternating";
    case SpectrumKind::Prescribed:
      return "prescribed";
  }
  return "unknown";
}

SpectrumKind parse_spectrum_kind(std::string_view name) {
  for (auto kind : {SpectrumKind::HAtom, SpectrumKind::Equidistant,
                    SpectrumKind::EquidistantAlternating, SpectrumKind::Random,
                    SpectrumKind::RandomAlternating, SpectrumKind::Prescribed}) {
    if (to_string(kind) == name) return kind;
  }
  throw InvalidInput("unknown spectrum kind '" + std::string(name) + "'");
}

Spectrum generate_spectrum(SpectrumKind kind, std::size_t dimension,
                           std::optional<std::uint64_t> seed) {
  if (dimension < 2) {
    throw InvalidInput("invalid dimension " + std::to_string(dimension) + ": need d >= 2");
  }
  Spectrum spectrum;
  spectrum.kind = kind;
  spectrum.eigenvalues.reserve(dimension);
  const auto d = static_cast<double>(dimension);

  switch (kind) {
    case SpectrumKind::HAtom:
      for (std::size_t n = 1; n <= dimension; ++n) {
        const auto nn = static_cast<double>(n);
        spectrum.eigenvalues.push_back(-kTwoPi / (nn * nn));
      }
      break;
    case SpectrumKind::Equidistant:
      for (std::size_t n = 1; n <= dimension; ++n) {
        spectrum.eigenvalues.push_back(kTwoPi * static_cast<double>(n) / d);
      }
      break;
    case SpectrumKind::EquidistantAlternating:
      for (std::size_t n = 1; n <= dimension; ++n) {
        const double shift = static_cast<double>((n - 1) % 2);
        spectrum.eigenvalues.push_back(kTwoPi * (static_cast<double>(n) / d + shift));
      }
      break;
    case SpectrumKind::Random:
    case SpectrumKind::RandomAlternating: {
      const std::uint64_t used = seed.value_or(fresh_seed());
      spectrum.seed = used;
      std::mt19937_64 rng(used);
      for (std::size_t n = 1; n <= dimension; ++n) {
        double lo = 0.0;
        double hi = 2.0 * kTwoPi;
        if (kind == SpectrumKind::RandomAlternating) {
          lo = (n % 2 == 1) ? 0.0 : kTwoPi;
          hi = lo + kTwoPi;
        }
        spectrum.eigenvalues.push_back(draw_distinct(rng, lo, hi, spectrum.eigenvalues));
      }
      break;
    }
    case SpectrumKind::Prescribed:
      throw InvalidInput("prescribed spectra are parsed, not generated");
  }
  return spectrum;
}

void validate_spectrum(const Spectrum& spectrum) {
  const auto& ev = spectrum.eigenvalues;
  if (ev.size() < 2) {
    throw InvalidInput("invalid dimension " + std::to_string(ev.size()) + ": need d >= 2");
  }
  std::vector<double> sorted(ev);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw InvalidInput("duplicate eigenvalue " + std::to_string(sorted[i]));
    }
  }
  for (double v : ev) {
    if (!std::isfinite(v)) throw InvalidInput("eigenvalues must be finite");
  }
}

void validate_measure(const SpectralMeasure& measure) {
  double sum = 0.0;
  for (std::size_t i = 0; i < measure.weights.size(); ++i) {
    const double w = measure.weights[i];
    if (!(w >= 0.0)) {
      throw InvalidInput("measure value " + std::to_string(i) + " is negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kMeasureSumTolerance) {
    throw InvalidInput("measure values sum to " + std::to_string(sum) +
                       ", more than 1e-10 away from 1");
  }
}

std::vector<double> parse_values(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  const auto is_separator = [](char c) {
    return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_separator(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_separator(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
      throw InvalidInput("malformed number '" + std::string(text.substr(pos, end - pos)) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

namespace {
std::vector<double> parse_counted(std::string_view text, std::size_t dimension, const char* what) {
  auto values = parse_values(text);
  if (values.size() != dimension) {
    throw InvalidInput(std::string("expected ") + std::to_string(dimension) + " " + what +
                       " values, got " + std::to_string(values.size()));
  }
  return values;
}
}  // namespace

Spectrum parse_prescribed_spectrum(std::string_view text, std::size_t dimension) {
  Spectrum spectrum;
  spectrum.kind = SpectrumKind::Prescribed;
  spectrum.eigenvalues = parse_counted(text, dimension, "spectrum");
  validate_spectrum(spectrum);
  return spectrum;
}

SpectralMeasure parse_prescribed_measure(std::string_view text, std::size_t dimension) {
  SpectralMeasure measure{parse_counted(text, dimension, "measure")};
  validate_measure(measure);
  return measure;
}

SpectralMeasure equal_measure(std::size_t dimension) {
  return SpectralMeasure{std::vector<double>(dimension, 1.0 / static_cast<double>(dimension))};
}

SpectralMeasure random_measure(std::size_t dimension, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  SpectralMeasure measure;
  measure.weights.resize(dimension);
  double sum = 0.0;
  do {
    sum = 0.0;
    for (auto& w : measure.weights) {
      w = dist(rng);
      sum += w;
    }
  } while (sum <= 0.0);
  for (auto& w : measure.weights) w /= sum;
  return measure;
}

double reduce_phase(double phase) {
  double r = std::fmod(phase, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Phases within rounding of pi count as -pi, so the jump of the half-open range
// does not depend on the last bits of lambda T.
double display_position(double kappa) { return kappa >= kPi - kWrapTolerance ? kappa - kTwoPi : kappa; }

std::vector<std::size_t> conditioning_order(std::span<const double> kappas) {
  const std::size_t count = kappas.size();
  std::vector<std::size_t> order;
  order.reserve(count);
  if (count == 0) return order;
  std::vector<bool> placed(count, false);
  // distance of every unplaced point to the placed set
  std::vector<double> gap(count, 0.0);
  order.push_back(0);
  placed[0] = true;
  for (std::size_t i = 1; i < count; ++i) gap[i] = circular_distance(kappas[i], kappas[0]);
  while (order.size() < count) {
    std::size_t best = count;
    for (std::size_t i = 0; i < count; ++i) {
      if (placed[i]) continue;
      if (best == count || gap[i] > gap[best]) best = i;
    }
    order.push_back(best);
    placed[best] = true;
    for (std::size_t i = 0; i < count; ++i) {
      if (!placed[i]) gap[i] = std::min(gap[i], circular_distance(kappas[i], kappas[best]));
    }
  }
  return order;
}

ReducedSpectrum reduce(const Spectrum& spectrum, double time) {
  const std::size_t d = spectrum.dimension();
  ReducedSpectrum reduced;
  reduced.time = time;
  reduced.origin_map.assign(d, 0);

  // Degeneracy cleanup in original order: a point closer than the threshold
  // to a kept one merges into its nearest kept neighbour.
  std::vector<double> kept_kappa;
  std::vector<std::size_t> kept_origin;
  std::vector<std::size_t> merged_into(d, 0);
  for (std::size_t n = 0; n < d; ++n) {
    const double kappa = reduce_phase(spectrum.eigenvalues[n] * time);
    std::size_t nearest = kept_kappa.size();
    double nearest_distance = kDegeneracyThreshold;
    for (std::size_t m = 0; m < kept_kappa.size(); ++m) {
      const double dist = circular_distance(kappa, kept_kappa[m]);
      if (dist < nearest_distance) {
        nearest_distance = dist;
        nearest = m;
      }
    }
    if (nearest == kept_kappa.size()) {
      kept_kappa.push_back(kappa);
      kept_origin.push_back(n);
    } else {
      reduced.degenerate = true;
    }
    merged_into[n] = nearest;
  }

  reduced.permutation = conditioning_order(kept_kappa);
  const std::size_t actual = kept_kappa.size();
  std::vector<std::size_t> position_of(actual, 0);
  reduced.kappas.resize(actual);
  reduced.phases.resize(actual);
  reduced.representatives.resize(actual);
  for (std::size_t pos = 0; pos < actual; ++pos) {
    const std::size_t survivor = reduced.permutation[pos];
    position_of[survivor] = pos;
    reduced.kappas[pos] = kept_kappa[survivor];
    reduced.representatives[pos] = kept_origin[survivor];
    reduced.phases[pos] = spectrum.eigenvalues[kept_origin[survivor]] * time;
  }
  for (std::size_t n = 0; n < d; ++n) reduced.origin_map[n] = position_of[merged_into[n]];
  return reduced;
}

double spectral_width(std::span<const double> kappas) {
  if (kappas.size() <= 1) return kTwoPi;
  std::vector<double> sorted(kappas.begin(), kappas.end());
  std::sort(sorted.begin(), sorted.end());
  double width = kTwoPi - (sorted.back() - sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) width = std::max(width, sorted[i] - sorted[i - 1]);
  return width;
}

double spectral_width(const ReducedSpectrum& reduced) { return spectral_width(reduced.kappas); }

bool is_non_narrow(const Spectrum& spectrum, const ReducedSpectrum& reduced, int order) {
  if (order <= 0) return true;
  if (order == 1) return spectral_width(reduced) <= kPi + kWidthTolerance;
  const double bound = kTwoPi / static_cast<double>(order + 1) + kWidthTolerance;
  if (spectral_width(reduced) > bound) return false;
  for (int n = 2; n <= order; ++n) {
    const ReducedSpectrum multiple = reduce(spectrum, static_cast<double>(n) * reduced.time);
    if (spectral_width(multiple) > bound) return false;
  }
  return true;
}

bool is_equidistant(const ReducedSpectrum& reduced, double tolerance) {
  const std::size_t count = reduced.kappas.size();
  if (count < 2) return false;
  std::vector<double> sorted(reduced.kappas);
  std::sort(sorted.begin(), sorted.end());
  const double expected = kTwoPi / static_cast<double>(count);
  if (std::abs(kTwoPi - (sorted.back() - sorted.front()) - expected) > tolerance) return false;
  for (std::size_t i = 1; i < count; ++i) {
    if (std::abs(sorted[i] - sorted[i - 1] - expected) > tolerance) return false;
  }
  return true;
}

ReducedMeasure reduce_measure(const SpectralMeasure& measure, const ReducedSpectrum& reduced) {
  if (measure.dimension() != reduced.original_dimension()) {
    throw InvalidInput("measure has " + std::to_string(measure.dimension()) +
                       " values, spectrum has " + std::to_string(reduced.original_dimension()));
  }
  ReducedMeasure out{std::vector<double>(reduced.actual_dimension(), 0.0)};
  for (std::size_t n = 0; n < measure.weights.size(); ++n) {
    out.weights[reduced.origin_map[n]] += measure.weights[n];
  }
  return out;
}

double variance(const ReducedSpectrum& reduced, const ReducedMeasure& measure) {
  double mean = 0.0;
  for (std::size_t n = 0; n < measure.weights.size(); ++n) {
    mean += measure.weights[n] * display_position(reduced.kappas[n]);
  }
  double spread = 0.0;
  for (std::size_t n = 0; n < measure.weights.size(); ++n) {
    const double dev = display_position(reduced.kappas[n]) - mean;
    spread += measure.weights[n] * dev * dev;
  }
  return std::sqrt(std::max(spread, 0.0)) / kPi;
}

}  // namespace qae
