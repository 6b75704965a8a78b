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

#include <string_view>

namespace qae {

/// Parses a time value the way the Numerator/Denominator fields work:
/// a decimal number, "pi", "<number>pi" or "<number>*pi", optionally as a
/// fraction "a/b" of two such terms ("9/16", "pi/2", "3pi/4").
/// Throws InvalidInput on anything else.
double parse_time_expression(std::string_view text);

}  // namespace qae
