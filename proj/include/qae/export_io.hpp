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
#include <span>
#include <string>
#include <vector>

#include "qae/sweep.hpp"

namespace qae {

/// One line of the statistics CSV. Counts and fractions are separate columns.
struct CsvStatsRow {
  std::string timestamp;  // ISO-8601, UTC
  SearchMode mode = SearchMode::Continuous;
  SpectrumKind spectrum = SpectrumKind::HAtom;
  MeasureKind measure = MeasureKind::Optimum;
  int order = 1;
  std::size_t dimension = 3;
  double location = 0.0;
  double from = 0.0;
  double to = 0.0;
  SweepStats stats;
};

std::string iso8601(std::chrono::system_clock::time_point when);

CsvStatsRow make_stats_row(const RunConfig& config, const SweepStats& stats,
                           std::chrono::system_clock::time_point when = std::chrono::system_clock::now());

/// Column names, in file order.
const std::vector<std::string>& stats_csv_columns();
std::string stats_csv_header();
std::string format_stats_row(const CsvStatsRow& row);

/// Appends one row, writing the header first when the file is empty. The row
/// goes out in a single write on an O_APPEND descriptor.
void append_stats(const std::filesystem::path& path, const CsvStatsRow& row);

/// Per-step CSV: index, time, flags, classification, dimensions, A, P, V,
/// max weight, residual. Values use 17 significant digits.
std::string series_csv(std::span<const StepRecord> series);
void export_series(const std::filesystem::path& path, std::span<const StepRecord> series);
std::vector<StepRecord> parse_series_csv(const std::string& text);
std::vector<StepRecord> read_series(const std::filesystem::path& path);

}  // namespace qae
