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

#include "qae/time_expr.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "qae/common.hpp"

namespace qae {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_term(std::string_view original, std::string_view term) {
  term = trim(term);
  double factor = 1.0;
  if (term.size() >= 2 && term.substr(term.size() - 2) == "pi") {
    factor = kPi;
    term.remove_suffix(2);
    term = trim(term);
    if (!term.empty() && term.back() == '*') {
      term.remove_suffix(1);
      term = trim(term);
    }
    if (term.empty()) return factor;
    if (term == "-") return -factor;
  }
  if (!term.empty() && term.front() == '+') term.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), value);
  if (term.empty() || ec != std::errc{} || ptr != term.data() + term.size() || !std::isfinite(value)) {
    throw InvalidInput("cannot parse time value '" + std::string(original) + "'");
  }
  return value * factor;
}

}  // namespace

double parse_time_expression(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_term(text, text);
  const double numerator = parse_term(text, text.substr(0, slash));
  const double denominator = parse_term(text, text.substr(slash + 1));
  if (denominator == 0.0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return numerator / denominator;
}

}  // namespace qae
