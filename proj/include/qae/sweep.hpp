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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qae/solver.hpp"
#include "qae/spectra.hpp"

namespace qae {

enum class SearchMode { Continuous, Random, SeekPositive, SeekEqual, SeekDimChange, Single };
enum class MeasureKind { Optimum, Equal, Random, Prescribed, Previous };
enum class Direction { Forward, Backward };
enum class SeekPredicate { Positive, Equal, DimChange };

std::string_view to_string(SearchMode mode);
std::string_view to_string(MeasureKind kind);
std::string_view to_string(Direction direction);
std::string_view to_string(SeekPredicate predicate);
SearchMode parse_search_mode(std::string_view name);
MeasureKind parse_measure_kind(std::string_view name);
Direction parse_direction(std::string_view name);
SeekPredicate parse_seek_predicate(std::string_view name);

struct RunConfig {
  SearchMode mode = SearchMode::Continuous;
  SpectrumKind spectrum_kind = SpectrumKind::HAtom;
  // Reuse spectrum_values as they are (the values of an earlier run).
  bool previous_spectrum = false;
  std::vector<double> spectrum_values;  // Prescribed or previous spectrum
  MeasureKind measure_kind = MeasureKind::Optimum;
  std::vector<double> measure_values;  // Prescribed or previous measure
  int order = 1;
  std::size_t dimension = 3;
  double location = -0.5;
  double from = 0.0;
  double to = 72.0;
  double step_size = 0.01;
  std::optional<std::uint64_t> seed;
  Direction direction = Direction::Forward;
  std::size_t max_steps = 10'000'000;
  unsigned threads = 1;  // 0: one per hardware thread
};

/// Throws InvalidInput naming the violated constraint.
void validate(const RunConfig& config);

/// A validated config with its spectrum generated once and its seed fixed.
struct ResolvedRun {
  RunConfig config;
  Spectrum spectrum;
  std::uint64_t seed = 0;
  std::optional<SpectralMeasure> fixed_measure;  // Equal, Prescribed, Previous
};

ResolvedRun resolve(const RunConfig& config);

struct StepFlags {
  bool non_narrow = false;
  bool degenerate = false;
  bool singular = false;
  bool positive = false;
  bool zero_dim = false;
};

/// The reduced measure as shown to the user: original index of each surviving
/// eigenvalue, its position in [-pi, pi), and its weight.
struct MeasureSnapshot {
  std::vector<std::size_t> index;
  std::vector<double> position;
  std::vector<double> weight;
  std::vector<double> probs;  // p_k, k = -L .. L
};

struct StepRecord {
  std::size_t index = 0;
  double time = 0.0;
  StepFlags flags;
  Classification classification = Classification::Infeasible;
  bool equidistant = false;
  int actual_dimension = 0;
  int nonzero_dimension = 0;
  double lookahead = 0.0;
  double total_prob = 0.0;
  double variance = 0.0;
  double max_weight = 0.0;
  double residual = 0.0;
  std::optional<MeasureSnapshot> measure;
};

struct SweepStats {
  std::size_t steps = 0;
  std::size_t non_narrow = 0;
  std::size_t degenerate = 0;
  std::size_t singular = 0;
  std::size_t positive = 0;
  std::size_t zero = 0;
  double non_narrow_fraction = 0.0;  // of steps
  double degenerate_fraction = 0.0;  // of steps
  double singular_fraction = 0.0;    // of steps
  double positive_fraction = 0.0;    // of non-narrow
  double zero_fraction = 0.0;        // of positive
  double avg_nonzero_dimension = 0.0;  // over positive
  double max_measure = 0.0;
  double avg_variance = 0.0;  // over all steps
  double avg_probability = 0.0;   // over positive
  double max_probability = 0.0;
  double avg_anticipation = 0.0;  // over positive
  double max_anticipation = 0.0;
  std::optional<double> time_of_maximum;
  // Positive steps per unit look-ahead bin [b, b+1), b = 0 .. L-1.
  std::vector<std::size_t> lookahead_bins;
};

class StatsAccumulator {
 public:
  explicit StatsAccumulator(int order);
  void add(const StepRecord& record);
  SweepStats finish() const;

 private:
  int order_;
  SweepStats stats_;
  double sum_nonzero_ = 0.0;
  double sum_variance_ = 0.0;
  double sum_probability_ = 0.0;
  double sum_anticipation_ = 0.0;
};

SweepStats compute_stats(std::span<const StepRecord> series, int order);

using ProgressCallback = std::function<void(std::size_t index, double time, const StepRecord& record)>;

struct RunControl {
  const std::atomic<bool>* cancel = nullptr;
  ProgressCallback progress;  // called in step order
};

/// One point of the pipeline: reduce, clean up, singular test, width test,
/// measure, classification, metrics. Failures are encoded in the flags.
StepRecord evaluate_point(const ResolvedRun& run, double time, std::size_t step_index = 0,
                          bool with_snapshot = false);

/// Number of grid points in [from, to): floor((to - from) / step).
std::size_t planned_steps(const RunConfig& config);

struct SweepResult {
  std::vector<StepRecord> series;
  SweepStats stats;
  std::size_t planned_steps = 0;
  bool cancelled = false;
  bool not_found = false;  // seek modes only
  // Measure of the last positive step over the original eigenvalues.
  std::optional<SpectralMeasure> last_measure;
};

SweepResult run_continuous(const ResolvedRun& run, const RunControl& control = {});
SweepResult run_random(const ResolvedRun& run, const RunControl& control = {});
SweepResult run_single(const ResolvedRun& run, const RunControl& control = {});

struct SeekHit {
  StepRecord record;
  std::size_t grid_index = 0;  // T = from +/- grid_index * step
};

/// Walks T = from +/- j step, j = start_index, start_index + 1, ... Positive and
/// Equal accept the first matching point from start_index on. DimChange takes
/// the point at start_index as baseline (its non-zero dimension when positive,
/// otherwise none) and accepts the first later positive point whose non-zero
/// dimension differs.
std::optional<SeekHit> seek(const ResolvedRun& run, SeekPredicate predicate, Direction direction,
                            std::size_t start_index = 0, const RunControl& control = {});

/// Repeated seek, the way "<"/">" continues from the last hit.
std::vector<SeekHit> seek_sequence(const ResolvedRun& run, SeekPredicate predicate, Direction direction,
                                   std::size_t count, const RunControl& control = {});

/// Dispatches on config.mode; seek modes run a single seek.
SweepResult execute(const ResolvedRun& run, const RunControl& control = {});

/// The positive step with the largest look-ahead, latest on ties.
std::optional<StepRecord> show_max(std::span<const StepRecord> series);

/// Expands a reduced-measure snapshot back onto the original indices.
SpectralMeasure measure_on_original(const MeasureSnapshot& snapshot, std::size_t dimension);

}  // namespace qae
