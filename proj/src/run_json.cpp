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

#include "qae/run_json.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qae/common.hpp"
#include "qae/time_expr.hpp"

namespace qae {
namespace {

const std::set<std::string>& request_keys() {
  static const std::set<std::string> keys = {
      "mode",     "spectrum", "spectrum_values", "previous_spectrum", "measure",   "measure_values",
      "order",    "dimension", "location",       "from",              "to",        "step_size",
      "seed",     "direction", "max_steps",      "threads",           "async",     "series_offset",
      "series_limit"};
  return keys;
}

double time_value(const Json& v, const char* key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_time_expression(v.get<std::string>());
  throw InvalidInput(std::string("'") + key + "' must be a number or an expression string");
}

std::string string_value(const Json& v, const char* key) {
  if (!v.is_string()) throw InvalidInput(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> number_array(const Json& v, const char* key) {
  if (!v.is_array()) throw InvalidInput(std::string("'") + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw InvalidInput(std::string("'") + key + "' must be an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

long long integer_value(const Json& v, const char* key) {
  if (!v.is_number_integer()) throw InvalidInput(std::string("'") + key + "' must be an integer");
  return v.get<long long>();
}

}  // namespace

RunConfig config_from_json(const Json& request) {
  if (!request.is_object()) throw InvalidInput("run request must be a JSON object");
  for (const auto& [key, value] : request.items()) {
    if (!request_keys().contains(key)) throw InvalidInput("unknown field '" + key + "'");
  }
  RunConfig c;
  if (request.contains("mode")) c.mode = parse_search_mode(string_value(request["mode"], "mode"));
  if (request.contains("spectrum")) {
    const std::string name = string_value(request["spectrum"], "spectrum");
    if (name == "previous") {
      c.previous_spectrum = true;
      c.spectrum_kind = SpectrumKind::Prescribed;
    } else {
      c.spectrum_kind = parse_spectrum_kind(name);
    }
  }
  if (request.contains("previous_spectrum")) {
    if (!request["previous_spectrum"].is_boolean()) throw InvalidInput("'previous_spectrum' must be a boolean");
    c.previous_spectrum = c.previous_spectrum || request["previous_spectrum"].get<bool>();
  }
  if (request.contains("spectrum_values")) c.spectrum_values = number_array(request["spectrum_values"], "spectrum_values");
  if (request.contains("measure")) c.measure_kind = parse_measure_kind(string_value(request["measure"], "measure"));
  if (request.contains("measure_values")) c.measure_values = number_array(request["measure_values"], "measure_values");
  if (request.contains("order")) c.order = static_cast<int>(integer_value(request["order"], "order"));
  if (request.contains("dimension")) {
    const long long d = integer_value(request["dimension"], "dimension");
    if (d < 0) throw InvalidInput("'dimension' must be non-negative");
    c.dimension = static_cast<std::size_t>(d);
  }
  if (request.contains("location")) c.location = time_value(request["location"], "location");
  if (request.contains("from")) c.from = time_value(request["from"], "from");
  if (request.contains("to")) c.to = time_value(request["to"], "to");
  if (request.contains("step_size")) c.step_size = time_value(request["step_size"], "step_size");
  if (request.contains("seed")) {
    const auto& s = request["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw InvalidInput("'seed' must be a non-negative integer");
    }
    c.seed = s.get<std::uint64_t>();
  }
  if (request.contains("direction")) c.direction = parse_direction(string_value(request["direction"], "direction"));
  if (request.contains("max_steps")) {
    const long long m = integer_value(request["max_steps"], "max_steps");
    if (m <= 0) throw InvalidInput("'max_steps' must be positive");
    c.max_steps = static_cast<std::size_t>(m);
  }
  if (request.contains("threads")) {
    const long long t = integer_value(request["threads"], "threads");
    if (t < 0 || t > 256) throw InvalidInput("'threads' must be in 0 .. 256");
    c.threads = static_cast<unsigned>(t);
  }
  return c;
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["mode"] = to_string(c.mode);
  j["spectrum"] = c.previous_spectrum ? std::string("previous") : std::string(to_string(c.spectrum_kind));
  j["measure"] = to_string(c.measure_kind);
  if (!c.spectrum_values.empty()) j["spectrum_values"] = c.spectrum_values;
  if (!c.measure_values.empty()) j["measure_values"] = c.measure_values;
  j["order"] = c.order;
  j["dimension"] = c.dimension;
  j["location"] = c.location;
  j["from"] = c.from;
  j["to"] = c.to;
  j["step_size"] = c.step_size;
  if (c.seed) j["seed"] = *c.seed;
  j["direction"] = to_string(c.direction);
  j["max_steps"] = c.max_steps;
  return j;
}

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["eigenvalues"] = s.eigenvalues;
  j["seed"] = s.seed ? Json(*s.seed) : Json(nullptr);
  return j;
}

Json stats_to_json(const SweepStats& s) {
  Json j;
  j["steps"] = s.steps;
  j["non_narrow"] = s.non_narrow;
  j["non_narrow_fraction"] = s.non_narrow_fraction;
  j["degenerate"] = s.degenerate;
  j["degenerate_fraction"] = s.degenerate_fraction;
  j["singular"] = s.singular;
  j["singular_fraction"] = s.singular_fraction;
  j["positive"] = s.positive;
  j["positive_fraction"] = s.positive_fraction;
  j["zero"] = s.zero;
  j["zero_fraction"] = s.zero_fraction;
  j["avg_nonzero_dimension"] = s.avg_nonzero_dimension;
  j["max_measure"] = s.max_measure;
  j["avg_variance"] = s.avg_variance;
  j["avg_probability"] = s.avg_probability;
  j["max_probability"] = s.max_probability;
  j["avg_anticipation"] = s.avg_anticipation;
  j["max_anticipation"] = s.max_anticipation;
  j["time_of_maximum"] = s.time_of_maximum ? Json(*s.time_of_maximum) : Json(nullptr);
  j["lookahead_bins"] = s.lookahead_bins;
  return j;
}

Json flags_to_json(const StepFlags& f) {
  return Json{{"non_narrow", f.non_narrow},
              {"degenerate", f.degenerate},
              {"singular", f.singular},
              {"positive", f.positive},
              {"zero_dim", f.zero_dim}};
}

Json snapshot_to_json(const MeasureSnapshot& s) {
  return Json{{"index", s.index}, {"position", s.position}, {"weight", s.weight}, {"probs", s.probs}};
}

Json record_to_json(const StepRecord& r) {
  Json j;
  j["index"] = r.index;
  j["time"] = r.time;
  j["flags"] = flags_to_json(r.flags);
  j["classification"] = to_string(r.classification);
  j["equidistant"] = r.equidistant;
  j["actual_dimension"] = r.actual_dimension;
  j["nonzero_dimension"] = r.nonzero_dimension;
  j["lookahead"] = r.lookahead;
  j["total_prob"] = r.total_prob;
  j["variance"] = r.variance;
  j["max_weight"] = r.max_weight;
  j["residual"] = r.residual;
  if (r.measure) j["measure"] = snapshot_to_json(*r.measure);
  return j;
}

Json event_to_json(std::size_t index, double time, const StepRecord& r) {
  return Json{{"index", index},           {"time", time},           {"flags", flags_to_json(r.flags)},
              {"lookahead", r.lookahead}, {"total_prob", r.total_prob}, {"variance", r.variance}};
}

Json result_to_json(const ResolvedRun& run, const SweepResult& result, const SeriesPage& page) {
  Json j;
  j["config"] = config_to_json(run.config);
  j["seed"] = run.seed;
  j["spectrum"] = spectrum_to_json(run.spectrum);
  j["planned_steps"] = result.planned_steps;
  j["cancelled"] = result.cancelled;
  j["not_found"] = result.not_found;
  j["stats"] = stats_to_json(result.stats);
  const std::size_t total = result.series.size();
  const std::size_t begin = std::min(page.offset, total);
  const std::size_t end = std::min(total, begin + page.limit);
  Json records = Json::array();
  for (std::size_t i = begin; i < end; ++i) records.push_back(record_to_json(result.series[i]));
  j["series"] = Json{{"offset", begin}, {"limit", page.limit}, {"total", total}, {"records", std::move(records)}};
  if (result.series.size() == 1 && result.series.front().measure) {
    j["measure"] = snapshot_to_json(*result.series.front().measure);
  }
  if (result.last_measure) j["last_measure"] = result.last_measure->weights;
  return j;
}

}  // namespace qae
