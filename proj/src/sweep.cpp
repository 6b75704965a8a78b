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

#include "qae/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "qae/common.hpp"
#include "qae/vandermonde.hpp"

namespace qae {
namespace {

constexpr std::size_t kChunk = 2048;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream per (run seed, step, purpose).
std::mt19937_64 substream(std::uint64_t seed, std::size_t index, std::uint64_t purpose) {
  return std::mt19937_64(splitmix64(splitmix64(seed ^ (purpose * 0xA24BAED4963EE407ULL)) + index));
}

constexpr std::uint64_t kMeasureStream = 1;
constexpr std::uint64_t kTimeStream = 2;

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view name, const Enum (&values)[N], const char* what) {
  for (auto v : values) {
    if (to_string(v) == name) return v;
  }
  throw InvalidInput(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

bool range_mode(SearchMode mode) { return mode == SearchMode::Continuous || mode == SearchMode::Random; }

std::size_t worker_count(unsigned requested) {
  if (requested == 0) return std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

MeasureSnapshot make_snapshot(const ReducedSpectrum& reduced, std::span<const double> mu,
                              const AnticipationResult& anticipation) {
  MeasureSnapshot snap;
  const std::size_t count = reduced.actual_dimension();
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  // Text box order: by original index.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return reduced.representatives[a] < reduced.representatives[b];
  });
  for (std::size_t i : order) {
    snap.index.push_back(reduced.representatives[i]);
    snap.position.push_back(display_position(reduced.kappas[i]));
    snap.weight.push_back(i < mu.size() ? mu[i] : 0.0);
  }
  snap.probs = anticipation.probs;
  return snap;
}

// Evaluates grid steps [begin, end) of a range run into out[begin, end).
template <typename TimeOf>
void evaluate_range(const ResolvedRun& run, std::size_t begin, std::size_t end, TimeOf time_of,
                    std::vector<StepRecord>& out, std::size_t workers) {
  const std::size_t count = end - begin;
  if (workers <= 1 || count < 64) {
    for (std::size_t j = begin; j < end; ++j) out[j] = evaluate_point(run, time_of(j), j);
    return;
  }
  workers = std::min(workers, count);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + count * w / workers;
    const std::size_t hi = begin + count * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] {
      for (std::size_t j = lo; j < hi; ++j) out[j] = evaluate_point(run, time_of(j), j);
    });
  }
}

template <typename TimeOf>
SweepResult run_range(const ResolvedRun& run, const RunControl& control, TimeOf time_of) {
  SweepResult result;
  const std::size_t total = planned_steps(run.config);
  result.planned_steps = total;
  result.series.resize(total);
  const std::size_t workers = worker_count(run.config.threads);
  std::size_t done = 0;
  while (done < total) {
    if (control.cancel != nullptr && control.cancel->load()) {
      result.cancelled = true;
      break;
    }
    // Serial runs stop between single steps; parallel runs between chunks.
    const std::size_t chunk = workers <= 1 ? 1 : kChunk;
    const std::size_t end = std::min(total, done + chunk);
    evaluate_range(run, done, end, time_of, result.series, workers);
    if (control.progress) {
      for (std::size_t j = done; j < end; ++j) control.progress(j, result.series[j].time, result.series[j]);
    }
    done = end;
  }
  result.series.resize(done);
  result.stats = compute_stats(result.series, run.config.order);

  for (auto it = result.series.rbegin(); it != result.series.rend(); ++it) {
    if (!it->flags.positive) continue;
    const auto again = evaluate_point(run, it->time, it->index, true);
    if (again.measure) result.last_measure = measure_on_original(*again.measure, run.spectrum.dimension());
    break;
  }
  return result;
}

double grid_time(const RunConfig& config, Direction direction, std::size_t index) {
  const double offset = static_cast<double>(index) * config.step_size;
  return direction == Direction::Forward ? config.from + offset : config.from - offset;
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Continuous:
      return "continuous";
    case SearchMode::Random:
      return "random";
    case SearchMode::SeekPositive:
      return "seek-positive";
    case SearchMode::SeekEqual:
      return "seek-equal";
    case SearchMode::SeekDimChange:
      return "seek-dim-change";
    case SearchMode::Single:
      return "single";
  }
  return "unknown";
}

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::Optimum:
      return "optimum";
    case MeasureKind::Equal:
      return "equal";
    case MeasureKind::Random:
      return "random";
    case MeasureKind::Prescribed:
      return "prescribed";
    case MeasureKind::Previous:
      return "previous";
  }
  return "unknown";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::Forward ? "forward" : "backward";
}

std::string_view to_string(SeekPredicate predicate) {
  switch (predicate) {
    case SeekPredicate::Positive:
      return "positive";
    case SeekPredicate::Equal:
      return "equal";
    case SeekPredicate::DimChange:
      return "dim-change";
  }
  return "unknown";
}

SearchMode parse_search_mode(std::string_view name) {
  static constexpr SearchMode all[] = {SearchMode::Continuous,    SearchMode::Random,
                                       SearchMode::SeekPositive,  SearchMode::SeekEqual,
                                       SearchMode::SeekDimChange, SearchMode::Single};
  return parse_enum(name, all, "search mode");
}

MeasureKind parse_measure_kind(std::string_view name) {
  static constexpr MeasureKind all[] = {MeasureKind::Optimum, MeasureKind::Equal, MeasureKind::Random,
                                        MeasureKind::Prescribed, MeasureKind::Previous};
  return parse_enum(name, all, "measure kind");
}

Direction parse_direction(std::string_view name) {
  static constexpr Direction all[] = {Direction::Forward, Direction::Backward};
  return parse_enum(name, all, "direction");
}

SeekPredicate parse_seek_predicate(std::string_view name) {
  static constexpr SeekPredicate all[] = {SeekPredicate::Positive, SeekPredicate::Equal,
                                          SeekPredicate::DimChange};
  return parse_enum(name, all, "seek predicate");
}

void validate(const RunConfig& c) {
  if (c.order < 0) throw InvalidInput("order L must be >= 0");
  const std::size_t minimum = 2 * static_cast<std::size_t>(c.order) + 1;
  if (c.dimension < 2) throw InvalidInput("invalid dimension: need d >= 2");
  if (c.dimension < minimum) {
    throw InvalidInput("Dimension, d: Number of eigenvalues, d ≥ 2L + 1 (got d = " +
                       std::to_string(c.dimension) + ", L = " + std::to_string(c.order) + ")");
  }
  for (double v : {c.location, c.from, c.to, c.step_size}) {
    if (!std::isfinite(v)) throw InvalidInput("location, from, to and step size must be finite");
  }
  if (c.mode != SearchMode::Single && !(c.step_size > 0.0)) throw InvalidInput("step size must be > 0");
  if (range_mode(c.mode) && c.from > c.to) throw InvalidInput("from must not exceed to");
  if (c.measure_kind == MeasureKind::Optimum && !(c.location < 0.0)) {
    throw InvalidInput("the optimum measure needs a negative location");
  }
  if (c.max_steps == 0) throw InvalidInput("max steps must be positive");
  const bool needs_values = c.previous_spectrum || c.spectrum_kind == SpectrumKind::Prescribed;
  if (needs_values && c.spectrum_values.size() != c.dimension) {
    throw InvalidInput("expected " + std::to_string(c.dimension) + " spectrum values, got " +
                       std::to_string(c.spectrum_values.size()));
  }
  if (c.measure_kind == MeasureKind::Prescribed || c.measure_kind == MeasureKind::Previous) {
    if (c.measure_values.size() != c.dimension) {
      throw InvalidInput("expected " + std::to_string(c.dimension) + " measure values, got " +
                         std::to_string(c.measure_values.size()));
    }
  }
}

ResolvedRun resolve(const RunConfig& config) {
  validate(config);
  ResolvedRun run;
  run.config = config;
  if (config.seed) {
    run.seed = *config.seed;
  } else {
    std::random_device device;
    run.seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  }
  run.config.seed = run.seed;

  if (config.previous_spectrum || config.spectrum_kind == SpectrumKind::Prescribed) {
    run.spectrum.eigenvalues = config.spectrum_values;
    run.spectrum.kind = config.previous_spectrum ? config.spectrum_kind : SpectrumKind::Prescribed;
    run.spectrum.seed = config.seed;
    validate_spectrum(run.spectrum);
  } else {
    run.spectrum = generate_spectrum(config.spectrum_kind, config.dimension, run.seed);
  }

  switch (config.measure_kind) {
    case MeasureKind::Equal:
      run.fixed_measure = equal_measure(config.dimension);
      break;
    case MeasureKind::Prescribed:
    case MeasureKind::Previous:
      run.fixed_measure = SpectralMeasure{config.measure_values};
      validate_measure(*run.fixed_measure);
      break;
    case MeasureKind::Optimum:
    case MeasureKind::Random:
      break;
  }
  return run;
}

StatsAccumulator::StatsAccumulator(int order) : order_(order) {
  stats_.lookahead_bins.assign(static_cast<std::size_t>(std::max(order, 1)), 0);
}

namespace {

// Look-ahead values equal up to rounding count as a tie; the later time wins.
// Mirrored times (T and period - T) give the same value for time-symmetric
// spectra.
bool beats_maximum(double value, double time, double best_value, double best_time) {
  const double tie = 1e-12 * std::max(1.0, std::abs(best_value));
  if (value > best_value + tie) return true;
  return value >= best_value - tie && time > best_time;
}

}  // namespace

void StatsAccumulator::add(const StepRecord& r) {
  ++stats_.steps;
  if (r.flags.non_narrow) ++stats_.non_narrow;
  if (r.flags.degenerate) ++stats_.degenerate;
  if (r.flags.singular) ++stats_.singular;
  sum_variance_ += r.variance;
  if (!r.flags.positive) return;
  ++stats_.positive;
  if (r.flags.zero_dim) ++stats_.zero;
  sum_nonzero_ += r.nonzero_dimension;
  sum_probability_ += r.total_prob;
  sum_anticipation_ += r.lookahead;
  stats_.max_measure = std::max(stats_.max_measure, r.max_weight);
  stats_.max_probability = std::max(stats_.max_probability, r.total_prob);
  if (!stats_.time_of_maximum || beats_maximum(r.lookahead, r.time, stats_.max_anticipation, *stats_.time_of_maximum)) {
    stats_.max_anticipation = r.lookahead;
    stats_.time_of_maximum = r.time;
  }
  ++stats_.lookahead_bins[static_cast<std::size_t>(lookahead_bin(r.lookahead, std::max(order_, 1)))];
}

SweepStats StatsAccumulator::finish() const {
  SweepStats s = stats_;
  const auto ratio = [](double num, std::size_t den) { return den == 0 ? 0.0 : num / static_cast<double>(den); };
  s.non_narrow_fraction = ratio(static_cast<double>(s.non_narrow), s.steps);
  s.degenerate_fraction = ratio(static_cast<double>(s.degenerate), s.steps);
  s.singular_fraction = ratio(static_cast<double>(s.singular), s.steps);
  s.positive_fraction = ratio(static_cast<double>(s.positive), s.non_narrow);
  s.zero_fraction = ratio(static_cast<double>(s.zero), s.positive);
  s.avg_nonzero_dimension = ratio(sum_nonzero_, s.positive);
  s.avg_variance = ratio(sum_variance_, s.steps);
  s.avg_probability = ratio(sum_probability_, s.positive);
  s.avg_anticipation = ratio(sum_anticipation_, s.positive);
  return s;
}

SweepStats compute_stats(std::span<const StepRecord> series, int order) {
  StatsAccumulator acc(order);
  for (const auto& r : series) acc.add(r);
  return acc.finish();
}

StepRecord evaluate_point(const ResolvedRun& run, double time, std::size_t step_index, bool with_snapshot) {
  const RunConfig& c = run.config;
  const int L = c.order;
  const std::size_t minimum = 2 * static_cast<std::size_t>(L) + 1;

  StepRecord rec;
  rec.index = step_index;
  rec.time = time;

  const ReducedSpectrum reduced = reduce(run.spectrum, time);
  rec.flags.degenerate = reduced.degenerate;
  rec.actual_dimension = static_cast<int>(reduced.actual_dimension());
  rec.equidistant = is_equidistant(reduced);
  if (reduced.actual_dimension() < minimum) {
    rec.flags.singular = true;
    rec.classification = Classification::Singular;
    return rec;
  }
  if (!is_non_narrow(run.spectrum, reduced, L)) {
    rec.classification = Classification::NonPositive;
    return rec;
  }
  rec.flags.non_narrow = true;

  Solution sol;
  try {
    if (c.measure_kind == MeasureKind::Optimum) {
      const ReducedSystem system = build_reduced_system(reduced, L);
      sol = maximize_lookahead(system, reduced, c.location, L);
    } else {
      SpectralMeasure measure;
      if (c.measure_kind == MeasureKind::Random) {
        auto rng = substream(run.seed, step_index, kMeasureStream);
        measure = random_measure(run.spectrum.dimension(), rng);
      } else {
        measure = *run.fixed_measure;
      }
      sol = evaluate_fixed_measure(reduce_measure(measure, reduced), reduced, c.location, L);
    }
  } catch (const IllConditioned&) {
    sol.classification = Classification::Singular;
  } catch (const SymmetryViolation&) {
    sol.classification = Classification::Singular;
  }

  rec.classification = sol.classification;
  rec.residual = sol.residual;
  if (sol.classification == Classification::Singular) rec.flags.singular = true;
  if (!sol.positive()) return rec;

  rec.flags.positive = true;
  rec.nonzero_dimension = sol.nonzero_dimension;
  rec.flags.zero_dim = static_cast<std::size_t>(sol.nonzero_dimension) < minimum;
  rec.lookahead = sol.anticipation.lookahead;
  rec.total_prob = sol.anticipation.total_prob;
  rec.variance = variance(reduced, ReducedMeasure{sol.mu});
  rec.max_weight = sol.mu.empty() ? 0.0 : *std::max_element(sol.mu.begin(), sol.mu.end());
  if (with_snapshot) rec.measure = make_snapshot(reduced, sol.mu, sol.anticipation);
  return rec;
}

std::size_t planned_steps(const RunConfig& c) {
  if (!(c.step_size > 0.0) || c.to <= c.from) return 0;
  const double ratio = (c.to - c.from) / c.step_size;
  return static_cast<std::size_t>(std::floor(ratio * (1.0 + 1.0e-12) + 1.0e-9));
}

SweepResult run_continuous(const ResolvedRun& run, const RunControl& control) {
  const RunConfig& c = run.config;
  return run_range(run, control, [&](std::size_t j) { return c.from + static_cast<double>(j) * c.step_size; });
}

SweepResult run_random(const ResolvedRun& run, const RunControl& control) {
  const RunConfig& c = run.config;
  return run_range(run, control, [&](std::size_t j) {
    const double lo = c.from + static_cast<double>(j) * c.step_size;
    const double hi = std::min(lo + c.step_size, c.to);
    auto rng = substream(run.seed, j, kTimeStream);
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    return lo + u * (hi - lo);
  });
}

SweepResult run_single(const ResolvedRun& run, const RunControl& control) {
  SweepResult result;
  result.planned_steps = 1;
  StepRecord rec = evaluate_point(run, run.config.from, 0, true);
  if (control.progress) control.progress(0, rec.time, rec);
  if (rec.measure && rec.flags.positive) {
    result.last_measure = measure_on_original(*rec.measure, run.spectrum.dimension());
  }
  result.series.push_back(std::move(rec));
  result.stats = compute_stats(result.series, run.config.order);
  return result;
}

std::optional<SeekHit> seek(const ResolvedRun& run, SeekPredicate predicate, Direction direction,
                            std::size_t start_index, const RunControl& control) {
  const RunConfig& c = run.config;
  std::size_t j = start_index;
  std::optional<int> baseline;
  if (predicate == SeekPredicate::DimChange) {
    const StepRecord start = evaluate_point(run, grid_time(c, direction, j), j);
    if (start.flags.positive) baseline = start.nonzero_dimension;
    ++j;
  }
  for (std::size_t taken = 0; taken < c.max_steps; ++taken, ++j) {
    if (control.cancel != nullptr && control.cancel->load()) return std::nullopt;
    const double t = grid_time(c, direction, j);
    StepRecord rec = evaluate_point(run, t, j);
    bool hit = false;
    switch (predicate) {
      case SeekPredicate::Positive:
        hit = rec.flags.positive;
        break;
      case SeekPredicate::Equal:
        hit = rec.equidistant;
        break;
      case SeekPredicate::DimChange:
        hit = rec.flags.positive && (!baseline || *baseline != rec.nonzero_dimension);
        break;
    }
    if (hit) {
      rec = evaluate_point(run, t, j, true);
      if (control.progress) control.progress(j, t, rec);
      return SeekHit{std::move(rec), j};
    }
  }
  return std::nullopt;
}

std::vector<SeekHit> seek_sequence(const ResolvedRun& run, SeekPredicate predicate, Direction direction,
                                   std::size_t count, const RunControl& control) {
  std::vector<SeekHit> hits;
  std::size_t start = 0;
  for (std::size_t i = 0; i < count; ++i) {
    auto hit = seek(run, predicate, direction, start, control);
    if (!hit) break;
    start = predicate == SeekPredicate::DimChange ? hit->grid_index : hit->grid_index + 1;
    hits.push_back(std::move(*hit));
  }
  return hits;
}

SweepResult execute(const ResolvedRun& run, const RunControl& control) {
  switch (run.config.mode) {
    case SearchMode::Continuous:
      return run_continuous(run, control);
    case SearchMode::Random:
      return run_random(run, control);
    case SearchMode::Single:
      return run_single(run, control);
    case SearchMode::SeekPositive:
    case SearchMode::SeekEqual:
    case SearchMode::SeekDimChange: {
      const SeekPredicate predicate = run.config.mode == SearchMode::SeekPositive ? SeekPredicate::Positive
                                      : run.config.mode == SearchMode::SeekEqual  ? SeekPredicate::Equal
                                                                                  : SeekPredicate::DimChange;
      SweepResult result;
      result.planned_steps = 1;
      auto hit = seek(run, predicate, run.config.direction, 0, control);
      if (!hit) {
        result.not_found = true;
        result.cancelled = control.cancel != nullptr && control.cancel->load();
        result.stats = compute_stats(result.series, run.config.order);
        return result;
      }
      if (hit->record.measure && hit->record.flags.positive) {
        result.last_measure = measure_on_original(*hit->record.measure, run.spectrum.dimension());
      }
      result.series.push_back(std::move(hit->record));
      result.stats = compute_stats(result.series, run.config.order);
      return result;
    }
  }
  return {};
}

std::optional<StepRecord> show_max(std::span<const StepRecord> series) {
  const StepRecord* best = nullptr;
  for (const auto& r : series) {
    if (!r.flags.positive) continue;
    if (best == nullptr || beats_maximum(r.lookahead, r.time, best->lookahead, best->time)) {
      best = &r;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

SpectralMeasure measure_on_original(const MeasureSnapshot& snapshot, std::size_t dimension) {
  SpectralMeasure m{std::vector<double>(dimension, 0.0)};
  for (std::size_t i = 0; i < snapshot.index.size(); ++i) m.weights[snapshot.index[i]] += snapshot.weight[i];
  double sum = 0.0;
  for (double w : m.weights) sum += w;
  if (sum > 0.0) {
    for (auto& w : m.weights) w /= sum;
  }
  return m;
}

}  // namespace qae
