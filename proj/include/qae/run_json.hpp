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

// JSON mapping of run requests and results, shared by the CLI (--json) and
// the HTTP service. Schemas: schemas/run_request.schema.json and
// schemas/run_response.schema.json.

#include <json.hpp>

#include "qae/sweep.hpp"

namespace qae {

using Json = nlohmann::json;

/// Parses a RunRequest. Unknown keys and wrong types raise InvalidInput; time
/// fields accept numbers or expressions such as "9/16".
RunConfig config_from_json(const Json& request);
Json config_to_json(const RunConfig& config);

Json spectrum_to_json(const Spectrum& spectrum);
Json stats_to_json(const SweepStats& stats);
Json flags_to_json(const StepFlags& flags);
Json snapshot_to_json(const MeasureSnapshot& snapshot);
Json record_to_json(const StepRecord& record);
/// Compact progress event: index, time, flags, A, P, V.
Json event_to_json(std::size_t index, double time, const StepRecord& record);

struct SeriesPage {
  std::size_t offset = 0;
  std::size_t limit = 10'000;
};

/// Everything except the run id and status: resolved config and spectrum,
/// stats, a page of the series, the hit measure for seek/single.
Json result_to_json(const ResolvedRun& run, const SweepResult& result, const SeriesPage& page = {});

}  // namespace qae
