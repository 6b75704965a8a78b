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

#include <chrono>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qae/sweep.hpp"

namespace qae {

enum class PlotKind { Curves, SpectrumBars };

struct CurveSelection {
  bool anticipation = true;
  bool probability = true;
  bool variance = true;
};

/// A run of consecutive steps sharing a classification flag, as a time
/// interval [from, to).
struct BarSegment {
  double from = 0.0;
  double to = 0.0;
};

enum class BarKind { Positive, Zeros, Singular, Narrow };

/// Colors of the classification bars, top-down: black, red, green, brown.
std::string_view bar_color(BarKind kind);
bool bar_flag(BarKind kind, const StepRecord& record);

/// Intervals of the time axis covered by a classification bar. Each step
/// covers the span up to the next step (the last one reuses the previous
/// spacing).
std::vector<BarSegment> bar_segments(std::span<const StepRecord> series, BarKind kind);
/// Covered fraction of the plotted time span.
double bar_coverage(std::span<const StepRecord> series, BarKind kind);

/// Anticipation (red, right axis), probability (black, left axis), variance
/// (green, left axis) against time on the top axis, with the four dashed
/// classification bars and the look-ahead bin distribution at the right.
/// Throws InvalidInput on an empty series.
std::string render_curves_svg(std::span<const StepRecord> series, int order, const CurveSelection& curves = {});

/// Reduced measure against eigenvalue position in [-pi, pi].
std::string render_spectrum_svg(const MeasureSnapshot& snapshot, double time);

/// base + "_YYYYMMDD-HHMMSS" + extension (".svg" when base has none).
std::filesystem::path timestamped_path(const std::filesystem::path& base,
                                       std::chrono::system_clock::time_point when);

/// Writes the plot next to base with a timestamp suffix; returns the path.
std::filesystem::path render_plot(std::span<const StepRecord> series, int order, const std::filesystem::path& base,
                                  const CurveSelection& curves = {},
                                  std::chrono::system_clock::time_point when = std::chrono::system_clock::now());
std::filesystem::path render_plot(const MeasureSnapshot& snapshot, double time, const std::filesystem::path& base,
                                  std::chrono::system_clock::time_point when = std::chrono::system_clock::now());

}  // namespace qae
