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

#include "qae/export_io.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include "qae/common.hpp"

namespace qae {
namespace {

std::string number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string stat(double v) { return number(v, 10); }
std::string exact(double v) { return number(v, 17); }

void write_all(const std::filesystem::path& path, int fd, const std::string& data) {
  const char* p = data.data();
  std::size_t left = data.size();
  while (left > 0) {
    const ssize_t n = ::write(fd, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw IoError("cannot write " + path.string() + ": " + std::strerror(errno));
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
}

Classification parse_classification(std::string_view s) {
  for (auto c : {Classification::Positive, Classification::Singular, Classification::NonPositive,
                 Classification::Infeasible}) {
    if (to_string(c) == s) return c;
  }
  throw InvalidInput("unknown classification '" + std::string(s) + "'");
}

double to_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidInput("bad number '" + s + "' in series");
  return v;
}

long long to_integer(const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidInput("bad integer '" + s + "' in series");
  return v;
}

}  // namespace

std::string iso8601(std::chrono::system_clock::time_point when) {
  const std::time_t t = std::chrono::system_clock::to_time_t(when);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CsvStatsRow make_stats_row(const RunConfig& config, const SweepStats& stats,
                           std::chrono::system_clock::time_point when) {
  CsvStatsRow row;
  row.timestamp = iso8601(when);
  row.mode = config.mode;
  row.spectrum = config.spectrum_kind;
  row.measure = config.measure_kind;
  row.order = config.order;
  row.dimension = config.dimension;
  row.location = config.location;
  row.from = config.from;
  row.to = config.to;
  row.stats = stats;
  return row;
}

const std::vector<std::string>& stats_csv_columns() {
  static const std::vector<std::string> columns = {
      "timestamp",         "search_mode",         "spectrum_type",   "measure_type",
      "order",             "dimension",           "location",        "from",
      "to",                "steps",               "non_narrow",      "non_narrow_fraction",
      "degenerate",        "degenerate_fraction", "singular",        "singular_fraction",
      "positive",          "positive_fraction",   "zero",            "zero_fraction",
      "avg_nonzero_dimension", "max_measure",     "avg_variance",    "avg_probability",
      "max_probability",   "avg_anticipation",    "max_anticipation", "time_of_maximum",
  };
  return columns;
}

std::string stats_csv_header() {
  std::string out;
  for (const auto& c : stats_csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out + '\n';
}

std::string format_stats_row(const CsvStatsRow& r) {
  const SweepStats& s = r.stats;
  std::ostringstream os;
  os << r.timestamp << ',' << to_string(r.mode) << ',' << to_string(r.spectrum) << ',' << to_string(r.measure)
     << ',' << r.order << ',' << r.dimension << ',' << stat(r.location) << ',' << stat(r.from) << ','
     << stat(r.to) << ',' << s.steps << ',' << s.non_narrow << ',' << stat(s.non_narrow_fraction) << ','
     << s.degenerate << ',' << stat(s.degenerate_fraction) << ',' << s.singular << ','
     << stat(s.singular_fraction) << ',' << s.positive << ',' << stat(s.positive_fraction) << ',' << s.zero
     << ',' << stat(s.zero_fraction) << ',' << stat(s.avg_nonzero_dimension) << ',' << stat(s.max_measure)
     << ',' << stat(s.avg_variance) << ',' << stat(s.avg_probability) << ',' << stat(s.max_probability) << ','
     << stat(s.avg_anticipation) << ',' << stat(s.max_anticipation) << ','
     << (s.time_of_maximum ? stat(*s.time_of_maximum) : std::string()) << '\n';
  return os.str();
}

void append_stats(const std::filesystem::path& path, const CsvStatsRow& row) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
  struct stat info {};
  if (::fstat(fd, &info) != 0) {
    ::close(fd);
    throw IoError("cannot stat " + path.string() + ": " + std::strerror(errno));
  }
  std::string data = info.st_size == 0 ? stats_csv_header() : std::string();
  data += format_stats_row(row);
  try {
    write_all(path, fd, data);
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
}

std::string series_csv(std::span<const StepRecord> series) {
  std::string out =
      "index,time,non_narrow,degenerate,singular,positive,zero_dim,classification,actual_dimension,"
      "nonzero_dimension,lookahead,total_prob,variance,max_weight,residual\n";
  for (const auto& r : series) {
    const auto& f = r.flags;
    out += std::to_string(r.index) + ',' + exact(r.time) + ',' + std::to_string(f.non_narrow) + ',' +
           std::to_string(f.degenerate) + ',' + std::to_string(f.singular) + ',' + std::to_string(f.positive) +
           ',' + std::to_string(f.zero_dim) + ',' + std::string(to_string(r.classification)) + ',' +
           std::to_string(r.actual_dimension) + ',' + std::to_string(r.nonzero_dimension) + ',' +
           exact(r.lookahead) + ',' + exact(r.total_prob) + ',' + exact(r.variance) + ',' + exact(r.max_weight) +
           ',' + exact(r.residual) + '\n';
  }
  return out;
}

void export_series(const std::filesystem::path& path, std::span<const StepRecord> series) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << series_csv(series);
  out.flush();
  if (!out) throw IoError("cannot write " + path.string());
}

std::vector<StepRecord> parse_series_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<StepRecord> series;
  if (!std::getline(in, line)) return series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() != 15) throw InvalidInput("series row has " + std::to_string(cells.size()) + " cells");
    StepRecord r;
    r.index = static_cast<std::size_t>(to_integer(cells[0]));
    r.time = to_double(cells[1]);
    r.flags.non_narrow = to_integer(cells[2]) != 0;
    r.flags.degenerate = to_integer(cells[3]) != 0;
    r.flags.singular = to_integer(cells[4]) != 0;
    r.flags.positive = to_integer(cells[5]) != 0;
    r.flags.zero_dim = to_integer(cells[6]) != 0;
    r.classification = parse_classification(cells[7]);
    r.actual_dimension = static_cast<int>(to_integer(cells[8]));
    r.nonzero_dimension = static_cast<int>(to_integer(cells[9]));
    r.lookahead = to_double(cells[10]);
    r.total_prob = to_double(cells[11]);
    r.variance = to_double(cells[12]);
    r.max_weight = to_double(cells[13]);
    r.residual = to_double(cells[14]);
    series.push_back(r);
  }
  return series;
}

std::vector<StepRecord> read_series(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_series_csv(buf.str());
}

}  // namespace qae
