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
#include <iosfwd>
#include <string>

#include "qae/sweep.hpp"

namespace qae {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNotFound = 2;
inline constexpr int kExitCancelled = 130;

/// Runs `qae <sweep|random|seek|single> [flags]`. Relative output paths are
/// taken relative to $QAE_OUTPUT_DIR when it is set. cancel may be raised
/// from a signal handler; partial results are still reported.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel = nullptr);

/// The numerical-output block: steps, counts with fractions, averages,
/// maxima and time of maximum.
std::string format_stats_block(const SweepStats& stats);

/// Index, position in [-pi, pi) and weight per reduced eigenvalue.
std::string format_measure_table(const MeasureSnapshot& snapshot);

}  // namespace qae
