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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "properties.hpp"
#include "qae/common.hpp"
#include "qae/spectra.hpp"

using namespace qae;
using qae::testing::reduced_from_kappas;

namespace {

Spectrum from_values(std::vector<double> values) {
  Spectrum s;
  s.eigenvalues = std::move(values);
  return s;
}

// Kappa of the reduced point each original eigenvalue ended up in.
std::vector<double> kappa_by_origin(const ReducedSpectrum& r) {
  std::vector<double> out;
  for (std::size_t i = 0; i < r.original_dimension(); ++i) out.push_back(r.kappas[r.origin_map[i]]);
  return out;
}

}  // namespace

TEST_CASE("generated spectra follow their formulas") {
  const double pi = kPi;
  SUBCASE("H atom") {
    const auto s = generate_spectrum(SpectrumKind::HAtom, 3);
    REQUIRE(s.dimension() == 3);
    CHECK(s.eigenvalues[0] == doctest::Approx(-2 * pi).epsilon(1e-15));
    CHECK(s.eigenvalues[1] == doctest::Approx(-pi / 2).epsilon(1e-15));
    CHECK(s.eigenvalues[2] == doctest::Approx(-2 * pi / 9).epsilon(1e-15));
    CHECK_FALSE(s.seed.has_value());
  }
  SUBCASE("equidistant") {
    const auto s = generate_spectrum(SpectrumKind::Equidistant, 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(pi));
    CHECK(s.eigenvalues[1] == doctest::Approx(2 * pi));
  }
  SUBCASE("equidistant alternating") {
    const auto s = generate_spectrum(SpectrumKind::EquidistantAlternating, 3);
    CHECK(s.eigenvalues[0] == doctest::Approx(2 * pi / 3));
    CHECK(s.eigenvalues[1] == doctest::Approx(2 * pi * (2.0 / 3 + 1)));
    CHECK(s.eigenvalues[2] == doctest::Approx(2 * pi));
  }
  SUBCASE("random kinds") {
    const auto r = generate_spectrum(SpectrumKind::Random, 200, 5);
    CHECK(std::all_of(r.eigenvalues.begin(), r.eigenvalues.end(), [](double x) { return x >= 0 && x < 4 * kPi; }));
    const auto a = generate_spectrum(SpectrumKind::RandomAlternating, 200, 5);
    for (std::size_t n = 0; n < a.dimension(); ++n) {
      // Odd-numbered lines (n = 1, 3, ...) are index 0, 2, ...
      if (n % 2 == 0) {
        CHECK((a.eigenvalues[n] >= 0 && a.eigenvalues[n] < kTwoPi));
      } else {
        CHECK((a.eigenvalues[n] >= kTwoPi && a.eigenvalues[n] < 2 * kTwoPi));
      }
    }
  }
}

TEST_CASE("random spectra are reproducible from the recorded seed") {
  const auto drawn = generate_spectrum(SpectrumKind::Random, 12);
  REQUIRE(drawn.seed.has_value());
  const auto again = generate_spectrum(SpectrumKind::Random, 12, drawn.seed);
  CHECK(again.eigenvalues == drawn.eigenvalues);
  CHECK(generate_spectrum(SpectrumKind::Random, 12, 99).eigenvalues !=
        generate_spectrum(SpectrumKind::Random, 12, 100).eigenvalues);
  validate_spectrum(drawn);
}

TEST_CASE("dimension below two is rejected") {
  CHECK_THROWS_AS(generate_spectrum(SpectrumKind::HAtom, 1), InvalidInput);
  CHECK_THROWS_AS(generate_spectrum(SpectrumKind::Random, 0), InvalidInput);
}

TEST_CASE("prescribed input") {
  CHECK(parse_prescribed_measure("0.5, 0.5", 2).weights == std::vector<double>{0.5, 0.5});
  CHECK_THROWS_AS(parse_prescribed_measure("0.5 0.4999999", 2), InvalidInput);
  CHECK_NOTHROW(parse_prescribed_measure("0.5 0.49999999999995", 2));
  CHECK_THROWS_AS(parse_prescribed_measure("1.5 -0.5", 2), InvalidInput);
  CHECK_THROWS_AS(parse_prescribed_measure("0.5 0.5", 3), InvalidInput);
  CHECK(parse_prescribed_spectrum("1\t2\t3", 3).eigenvalues == std::vector<double>{1, 2, 3});
  CHECK_THROWS_AS(parse_prescribed_spectrum("1 2 1", 3), InvalidInput);
  CHECK(parse_values(" 1,, 2\t,3 \n4") == std::vector<double>{1, 2, 3, 4});
  CHECK(parse_values("1e-3 -2.5E+1") == std::vector<double>{1e-3, -25});
  CHECK_THROWS_AS(parse_values("1 two 3"), InvalidInput);
  CHECK_THROWS_AS(parse_values("1.2.3"), InvalidInput);
}

TEST_CASE("reduction") {
  const auto h3 = generate_spectrum(SpectrumKind::HAtom, 3);
  SUBCASE("T = 1") {
    const auto r = reduce(h3, 1.0);
    CHECK_FALSE(r.degenerate);
    REQUIRE(r.actual_dimension() == 3);
    const auto k = kappa_by_origin(r);
    CHECK(circular_distance(k[0], 0.0) <= 1e-12);
    CHECK(k[1] == doctest::Approx(1.5 * kPi));
    CHECK(k[2] == doctest::Approx(kTwoPi - kTwoPi / 9));
    for (double v : r.kappas) CHECK((v >= 0.0 && v < kTwoPi));
  }
  SUBCASE("T = 0 merges everything") {
    const auto r = reduce(h3, 0.0);
    CHECK(r.degenerate);
    CHECK(r.actual_dimension() == 1);
    CHECK(r.origin_map == std::vector<std::size_t>{0, 0, 0});
  }
  SUBCASE("T = 72 is a full period") {
    const auto r = reduce(h3, 72.0);
    CHECK(r.actual_dimension() == 1);
    CHECK(circular_distance(r.kappas[0], 0.0) <= 1e-9);
  }
}

TEST_CASE("degeneracy threshold") {
  const double base = 1.0;
  CHECK(reduce(from_values({base, base + 1e-6 + 1e-9, 3.0}), 1.0).actual_dimension() == 3);
  const auto merged = reduce(from_values({base, base + 1e-6 - 1e-9, 3.0}), 1.0);
  CHECK(merged.actual_dimension() == 2);
  CHECK(merged.degenerate);
  CHECK(merged.origin_map[0] == merged.origin_map[1]);
  // Across the 0 / 2 pi seam.
  CHECK(reduce(from_values({1e-7, kTwoPi - 1e-7, 3.0}), 1.0).actual_dimension() == 2);
}

TEST_CASE("reduction properties") {
  const auto h3 = generate_spectrum(SpectrumKind::HAtom, 3);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t(0.0, 72.0);
  for (int i = 0; i < 200; ++i) {
    const double T = t(rng);
    const auto a = kappa_by_origin(reduce(h3, T));
    const auto b = kappa_by_origin(reduce(h3, T + 72.0));
    for (std::size_t n = 0; n < a.size(); ++n) CHECK(circular_distance(a[n], b[n]) <= 1e-9);
  }
  // Idempotence: reducing already reduced, separated values at T = 1.
  const auto kappas = qae::testing::random_kappas(rng, 9, 0.01);
  const auto once = reduce(from_values(kappas), 1.0);
  std::vector<double> as_spectrum(once.kappas);
  const auto twice = reduce(from_values(as_spectrum), 1.0);
  CHECK(twice.kappas == once.kappas);
}

TEST_CASE("conditioning order") {
  CHECK(conditioning_order(std::vector<double>{0.0, kPi}) == std::vector<std::size_t>{0, 1});
  CHECK(conditioning_order(std::vector<double>{0.0, 1e-5, kPi}) == std::vector<std::size_t>{0, 2, 1});

  // Every next point is a farthest one from the points already placed.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto kappas = qae::testing::random_kappas(rng, 7, 1e-4);
    const auto order = conditioning_order(kappas);
    REQUIRE(order.size() == 7);
    CHECK(order[0] == 0);
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6});
    for (std::size_t i = 1; i < order.size(); ++i) {
      const auto distance_to_placed = [&](std::size_t candidate) {
        double d = INFINITY;
        for (std::size_t j = 0; j < i; ++j) d = std::min(d, circular_distance(kappas[order[j]], kappas[candidate]));
        return d;
      };
      const double chosen = distance_to_placed(order[i]);
      for (std::size_t later = i + 1; later < order.size(); ++later) {
        CHECK(chosen >= distance_to_placed(order[later]));
      }
    }
  }
}

TEST_CASE("spectral width") {
  CHECK(spectral_width(std::vector<double>{0.0, kPi}) == doctest::Approx(kPi));
  CHECK(spectral_width(std::vector<double>{0.0, kPi / 4, kPi / 2}) == doctest::Approx(1.5 * kPi));
  CHECK(spectral_width(std::vector<double>{1.0}) == doctest::Approx(kTwoPi));
  for (std::size_t d : {3u, 5u, 12u}) {
    std::vector<double> k;
    for (std::size_t n = 0; n < d; ++n) k.push_back(kTwoPi * static_cast<double>(n) / static_cast<double>(d));
    CHECK(spectral_width(k) == doctest::Approx(kTwoPi / static_cast<double>(d)));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto k = qae::testing::random_kappas(rng, 2 + rng() % 8, 1e-3);
    const double w = spectral_width(k);
    CHECK((w > 0 && w < kTwoPi));
  }
}

TEST_CASE("width test") {
  SUBCASE("order 1") {
    const auto boundary = from_values({0.0, kPi / 2, kPi});
    CHECK(is_non_narrow(boundary, reduce(boundary, 1.0), 1));
    const auto half_plane = from_values({0.1, 0.7, 1.4});
    CHECK_FALSE(is_non_narrow(half_plane, reduce(half_plane, 1.0), 1));
  }
  SUBCASE("order 2 looks at T and 2T") {
    const auto eq5 = generate_spectrum(SpectrumKind::Equidistant, 5);
    const auto r = reduce(eq5, 1.0);
    const bool expect = spectral_width(reduce(eq5, 1.0)) <= kTwoPi / 3 + kWidthTolerance &&
                        spectral_width(reduce(eq5, 2.0)) <= kTwoPi / 3 + kWidthTolerance;
    CHECK(expect);
    CHECK(is_non_narrow(eq5, r, 2) == expect);
    // Width fine at T, too wide at 2T.
    const auto s = from_values({0.0, kPi / 2, kPi, 1.5 * kPi});
    const bool width_t = spectral_width(reduce(s, 1.0)) <= kTwoPi / 3 + kWidthTolerance;
    const bool width_2t = spectral_width(reduce(s, 2.0)) <= kTwoPi / 3 + kWidthTolerance;
    CHECK(width_t);
    CHECK_FALSE(width_2t);
    CHECK_FALSE(is_non_narrow(s, reduce(s, 1.0), 2));
  }
  SUBCASE("order 0") {
    const auto s = from_values({0.1, 0.2});
    CHECK(is_non_narrow(s, reduce(s, 1.0), 0));
  }
}

TEST_CASE("equidistance") {
  CHECK(is_equidistant(reduce(generate_spectrum(SpectrumKind::Equidistant, 7), 1.0)));
  CHECK_FALSE(is_equidistant(reduce(generate_spectrum(SpectrumKind::HAtom, 4), 1.0)));
}

TEST_CASE("reduced measure") {
  const auto plain = from_values({0.5, 2.0, 4.0});
  const auto r = reduce(plain, 1.0);
  const auto nu = reduce_measure(SpectralMeasure{{0.2, 0.3, 0.5}}, r);
  for (std::size_t n = 0; n < 3; ++n) CHECK(nu.weights[r.origin_map[n]] == doctest::Approx(std::vector{0.2, 0.3, 0.5}[n]));

  const auto merged = reduce(from_values({1.0, 1.0 + 1e-7, 3.0}), 1.0);
  const auto m = reduce_measure(SpectralMeasure{{0.2, 0.3, 0.5}}, merged);
  REQUIRE(m.weights.size() == 2);
  CHECK(m.weights[merged.origin_map[0]] == doctest::Approx(0.5));
  CHECK(m.weights[merged.origin_map[2]] == doctest::Approx(0.5));

  const auto all = reduce(generate_spectrum(SpectrumKind::HAtom, 3), 0.0);
  CHECK(reduce_measure(equal_measure(3), all).weights == std::vector<double>{1.0});

  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto mu = random_measure(8, rng);
    const auto red = reduce(generate_spectrum(SpectrumKind::HAtom, 8), std::uniform_real_distribution<>(0.0, 5.0)(rng));
    double sum = 0.0;
    for (double w : reduce_measure(mu, red).weights) sum += w;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
}

TEST_CASE("variance") {
  const auto one = reduced_from_kappas({0.3, 2.0, 4.0});
  CHECK(variance(one, ReducedMeasure{{1.0, 0.0, 0.0}}) == doctest::Approx(0.0));
  const double a = 1.0;
  const auto pair = reduce(from_values({kTwoPi - a, a}), 1.0);
  CHECK(variance(pair, ReducedMeasure{{0.5, 0.5}}) == doctest::Approx(a / kPi));
}

TEST_CASE("random and equal measures") {
  std::mt19937_64 rng(7);
  const auto mu = random_measure(10, rng);
  validate_measure(mu);
  CHECK(std::all_of(mu.weights.begin(), mu.weights.end(), [](double w) { return w >= 0; }));
  CHECK(equal_measure(4).weights == std::vector<double>(4, 0.25));
  CHECK_THROWS_AS(validate_measure(SpectralMeasure{{0.6, 0.6}}), InvalidInput);
}

TEST_CASE("kind names") {
  for (auto kind : {SpectrumKind::HAtom, SpectrumKind::Equidistant, SpectrumKind::EquidistantAlternating,
                    SpectrumKind::Random, SpectrumKind::RandomAlternating, SpectrumKind::Prescribed}) {
    CHECK(parse_spectrum_kind(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(parse_spectrum_kind("hydrogen"), InvalidInput);
}

TEST_CASE("display positions") {
  CHECK(display_position(0.5) == 0.5);
  CHECK(display_position(1.5 * kPi) == doctest::Approx(-0.5 * kPi));
  CHECK(display_position(kPi) == doctest::Approx(-kPi));
  CHECK(display_position(std::nextafter(kPi, 0.0)) == doctest::Approx(-kPi));
  CHECK(display_position(kPi - 1e-6) == doctest::Approx(kPi - 1e-6));
}
