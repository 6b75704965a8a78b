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

#include "qae/cli.hpp"

#include <CLI11.hpp>

#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qae/common.hpp"
#include "qae/export_io.hpp"
#include "qae/plot.hpp"
#include "qae/run_json.hpp"
#include "qae/time_expr.hpp"

namespace qae {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string spectrum = "h-atom";
  std::string spectrum_values;
  std::string measure = "optimum";
  std::string measure_values;
  int order = 1;
  std::size_t dimension = 3;
  bool dimension_set = false;
  std::string location = "-0.5";
  std::string from = "0";
  std::string to = "72";
  std::string step = "0.01";
  std::optional<std::uint64_t> seed;
  std::string direction = "forward";
  std::string predicate = "positive";
  std::size_t repeat = 1;
  std::size_t max_steps = 10'000'000;
  unsigned threads = 1;
  std::string stats_csv;
  std::string series_csv;
  std::string plot;
  bool show_max = false;
  bool json = false;
  std::string state;
};

std::string line(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

std::string line(const char* fmt, ...) {
  char buffer[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buffer, sizeof buffer, fmt, args);
  va_end(args);
  return buffer;
}

fs::path output_path(const std::string& given) {
  fs::path p(given);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("QAE_OUTPUT_DIR"); dir != nullptr && *dir != '\0') return fs::path(dir) / p;
  }
  return p;
}

// "@file" reads the values from a file.
std::string values_text(const std::string& given) {
  if (given.empty() || given.front() != '@') return given;
  std::ifstream in(given.substr(1));
  if (!in) throw InvalidInput("cannot read values from '" + given.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double time_flag(const std::string& text, const char* flag) {
  try {
    return parse_time_expression(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string("--") + flag + ": " + e.what());
  }
}

Json read_state(const std::string& path) {
  if (path.empty()) throw InvalidInput("'previous' needs --state with the file of an earlier run");
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read state file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput("state file '" + path + "' is not valid: " + e.what());
  }
}

void write_state(const std::string& path, const ResolvedRun& run, const SweepResult& result) {
  Json state{{"spectrum", spectrum_to_json(run.spectrum)}, {"seed", run.seed}};
  if (result.last_measure) {
    state["measure"] = result.last_measure->weights;
  } else if (run.fixed_measure) {
    state["measure"] = run.fixed_measure->weights;
  }
  const fs::path target = output_path(path);
  std::ofstream out(target);
  if (!out) throw IoError("cannot write state file '" + target.string() + "'");
  out << state.dump(2) << '\n';
}

RunConfig build_config(const Options& o, SearchMode mode) {
  RunConfig c;
  c.mode = mode;
  c.order = o.order;
  c.dimension = o.dimension;
  c.location = time_flag(o.location, "location");
  c.from = time_flag(o.from, "from");
  c.to = time_flag(o.to, "to");
  c.step_size = time_flag(o.step, "step");
  c.seed = o.seed;
  c.direction = parse_direction(o.direction);
  c.max_steps = o.max_steps;
  c.threads = o.threads;

  std::optional<Json> state;
  if (o.spectrum == "previous") {
    state = read_state(o.state);
    const auto& s = state->at("spectrum");
    c.previous_spectrum = true;
    c.spectrum_kind = parse_spectrum_kind(s.at("kind").get<std::string>());
    c.spectrum_values = s.at("eigenvalues").get<std::vector<double>>();
    if (!o.dimension_set) c.dimension = c.spectrum_values.size();
    if (!o.seed && s.contains("seed") && s["seed"].is_number()) c.seed = s["seed"].get<std::uint64_t>();
  } else {
    c.spectrum_kind = parse_spectrum_kind(o.spectrum);
    if (c.spectrum_kind == SpectrumKind::Prescribed) {
      if (o.spectrum_values.empty()) throw InvalidInput("--spectrum prescribed needs --spectrum-values");
      c.spectrum_values = parse_values(values_text(o.spectrum_values));
      if (!o.dimension_set) c.dimension = c.spectrum_values.size();
    } else if (!o.spectrum_values.empty()) {
      throw InvalidInput("--spectrum-values only applies to --spectrum prescribed");
    }
  }

  c.measure_kind = parse_measure_kind(o.measure);
  if (c.measure_kind == MeasureKind::Prescribed) {
    if (o.measure_values.empty()) throw InvalidInput("--measure prescribed needs --measure-values");
    c.measure_values = parse_values(values_text(o.measure_values));
  } else if (!o.measure_values.empty()) {
    throw InvalidInput("--measure-values only applies to --measure prescribed");
  } else if (c.measure_kind == MeasureKind::Previous) {
    if (!state) state = read_state(o.state);
    if (!state->contains("measure")) throw InvalidInput("state file holds no measure");
    c.measure_values = state->at("measure").get<std::vector<double>>();
  }
  validate(c);
  return c;
}

void print_measure(std::ostream& out, const StepRecord& record) {
  out << line("T = %.10g  %s", record.time, std::string(to_string(record.classification)).c_str());
  out << line("  non-zero dimension %d  look-ahead %.6f  probability %.6f\n", record.nonzero_dimension,
              record.lookahead, record.total_prob);
  if (record.measure) out << format_measure_table(*record.measure);
}

Json hit_json(const StepRecord& record) { return record_to_json(record); }

}  // namespace

std::string format_stats_block(const SweepStats& s) {
  const auto count = [](std::size_t n, double f) { return line("%zu (%.6g)", n, f); };
  const std::string tmax = s.time_of_maximum ? line("%.10g", *s.time_of_maximum) : std::string("-");
  std::string out;
  out += line("%-20s%-22s%-20s%.6f\n", "Steps", std::to_string(s.steps).c_str(), "Max. measure", s.max_measure);
  out += line("%-20s%-22s%-20s%.6f\n", "Non-narrow", count(s.non_narrow, s.non_narrow_fraction).c_str(),
              "Ave. variance", s.avg_variance);
  out += line("%-20s%-22s%-20s%.6f\n", "Degenerate", count(s.degenerate, s.degenerate_fraction).c_str(),
              "Ave. probability", s.avg_probability);
  out += line("%-20s%-22s%-20s%.6f\n", "Singular", count(s.singular, s.singular_fraction).c_str(),
              "Max. probability", s.max_probability);
  out += line("%-20s%-22s%-20s%.6f\n", "Positive", count(s.positive, s.positive_fraction).c_str(),
              "Ave. anticipation", s.avg_anticipation);
  out += line("%-20s%-22s%-20s%.6f\n", "Zero", count(s.zero, s.zero_fraction).c_str(), "Max. anticipation",
              s.max_anticipation);
  out += line("%-20s%-22s%-20s%s\n", "Non-zero dimension", line("%.6f", s.avg_nonzero_dimension).c_str(),
              "Time of maximum", tmax.c_str());
  return out;
}

std::string format_measure_table(const MeasureSnapshot& snapshot) {
  std::string out = line("%-8s%-14s%s\n", "Index", "Spectrum", "Measure");
  for (std::size_t i = 0; i < snapshot.index.size(); ++i) {
    out += line("%-8zu%-14.6f%.6f\n", snapshot.index[i], snapshot.position[i], snapshot.weight[i]);
  }
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel) {
  CLI::App app{"Quantum anticipation explorer: sweeps, seeks and single evaluations"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--spectrum", o.spectrum,
                    "h-atom, equidistant, equidistant-alternating, random, random-alternating, prescribed, previous");
    sub->add_option("--spectrum-values", o.spectrum_values, "eigenvalues for a prescribed spectrum (or @file)");
    sub->add_option("--measure", o.measure, "optimum, equal, random, prescribed, previous");
    sub->add_option("--measure-values", o.measure_values, "weights for a prescribed measure (or @file)");
    sub->add_option("--order", o.order, "anticipation order L");
    sub->add_option_function<std::size_t>(
        "--dim", [&o](const std::size_t& d) { o.dimension = d;
          o.dimension_set = true;
        }, "number of eigenvalues d");
    sub->add_option("--location", o.location, "measurement location in T units (negative)");
    sub->add_option("--from", o.from, "start time; accepts 9/16, pi/2");
    sub->add_option("--step", o.step, "step size");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--max-steps", o.max_steps, "step budget");
    sub->add_option("--threads", o.threads, "worker threads (0: all cores)");
    sub->add_option("--stats-csv", o.stats_csv, "append the statistics row to this CSV file");
    sub->add_option("--series-csv", o.series_csv, "write the per-step series to this CSV file");
    sub->add_option("--plot", o.plot, "write an SVG plot (timestamp appended to the name)");
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--state", o.state, "file keeping spectrum and measure for 'previous'");
  };

  auto* sweep = app.add_subcommand("sweep", "continuous sweep over [from, to)");
  auto* random = app.add_subcommand("random", "one random time per grid cell of [from, to)");
  auto* seek = app.add_subcommand("seek", "first grid time where a predicate holds");
  auto* single = app.add_subcommand("single", "one evaluation at time --from");
  for (auto* sub : {sweep, random, seek, single}) add_common(sub);
  for (auto* sub : {sweep, random}) {
    sub->add_option("--to", o.to, "end time (exclusive)");
    sub->add_flag("--show-max", o.show_max, "print the measure at maximum look-ahead");
  }
  seek->add_option("--predicate", o.predicate, "positive, equal, dim-change");
  seek->add_option("--direction", o.direction, "forward, backward");
  seek->add_option("--repeat", o.repeat, "number of successive hits")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  SearchMode mode = SearchMode::Continuous;
  if (random->parsed()) mode = SearchMode::Random;
  if (single->parsed()) mode = SearchMode::Single;
  std::optional<SeekPredicate> predicate;
  if (seek->parsed()) {
    try {
      predicate = parse_seek_predicate(o.predicate);
    } catch (const InvalidInput& e) {
      err << "error: " << e.what() << '\n';
      return kExitInvalid;
    }
    mode = *predicate == SeekPredicate::Positive ? SearchMode::SeekPositive
           : *predicate == SeekPredicate::Equal  ? SearchMode::SeekEqual
                                                 : SearchMode::SeekDimChange;
  }

  ResolvedRun run;
  try {
    run = resolve(build_config(o, mode));
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const Json::exception& e) {
    err << "error: state file: " << e.what() << '\n';
    return kExitInvalid;
  }

  RunControl control;
  control.cancel = cancel;
  SweepResult result;
  std::vector<StepRecord> hits;
  try {
    if (predicate) {
      for (auto& hit : seek_sequence(run, *predicate, run.config.direction, o.repeat, control)) {
        hits.push_back(std::move(hit.record));
      }
      result.planned_steps = 1;
      result.not_found = hits.size() < o.repeat;
      result.cancelled = cancel != nullptr && cancel->load();
      if (!hits.empty()) {
        result.series.push_back(hits.back());
        if (hits.back().measure && hits.back().flags.positive) {
          result.last_measure = measure_on_original(*hits.back().measure, run.spectrum.dimension());
        }
      }
      result.stats = compute_stats(result.series, run.config.order);
    } else {
      result = execute(run, control);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  std::optional<StepRecord> maximum;
  if (o.show_max) {
    if (auto best = show_max(result.series)) maximum = evaluate_point(run, best->time, best->index, true);
  }

  try {
    if (!o.stats_csv.empty()) append_stats(output_path(o.stats_csv), make_stats_row(run.config, result.stats));
    if (!o.series_csv.empty()) export_series(output_path(o.series_csv), result.series);
    if (!o.plot.empty()) {
      const bool measure_view = mode != SearchMode::Continuous && mode != SearchMode::Random;
      fs::path written;
      if (measure_view && !result.series.empty() && result.series.front().measure) {
        written = render_plot(*result.series.front().measure, result.series.front().time, output_path(o.plot));
      } else if (!result.series.empty()) {
        written = render_plot(result.series, run.config.order, output_path(o.plot));
      } else {
        err << "warning: nothing to plot\n";
      }
      if (!written.empty() && !o.json) err << "plot written to " << written.string() << '\n';
    }
    if (!o.state.empty()) write_state(o.state, run, result);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (o.json) {
    Json j = result_to_json(run, result, SeriesPage{0, 0});
    j["series"].erase("records");
    if (predicate) {
      Json list = Json::array();
      for (const auto& h : hits) list.push_back(hit_json(h));
      j["hits"] = std::move(list);
    }
    if (maximum) j["show_max"] = record_to_json(*maximum);
    out << j.dump(2) << '\n';
  } else {
    out << line("Spectrum %s, d = %zu, L = %d, location %.6g, seed %llu\n",
                std::string(to_string(run.spectrum.kind)).c_str(), run.spectrum.dimension(), run.config.order,
                run.config.location, static_cast<unsigned long long>(run.seed));
    for (const auto& h : hits) print_measure(out, h);
    if (mode == SearchMode::Single && !result.series.empty()) print_measure(out, result.series.front());
    out << format_stats_block(result.stats);
    if (maximum) {
      out << "Maximum look-ahead\n";
      print_measure(out, *maximum);
    }
  }

  if (result.cancelled) {
    err << "cancelled after " << result.series.size() << " of " << result.planned_steps << " steps\n";
    return kExitCancelled;
  }
  if (predicate && result.not_found) {
    err << "seek: predicate not met within " << run.config.max_steps << " steps\n";
    return kExitNotFound;
  }
  return kExitOk;
}

}  // namespace qae
