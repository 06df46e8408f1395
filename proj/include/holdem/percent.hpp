// Copyright 2026 The holdem-loop Authors
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

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace holdem {

using Ratio = boost::rational<std::int64_t>;

/// num/den expressed in percent, exactly.
Ratio percent_of(std::int64_t num, std::int64_t den);

/// Tenths of a percent, rounded half to even.
std::int64_t round_tenths(Ratio percent);

/// One-decimal rendering, e.g. 61.25 -> "61.2", 37.45 -> "37.4".
std::string format_percent(Ratio percent);

/// Exact value of a decimal literal such as "47.5" or "100".
Ratio parse_decimal(std::string_view text);

}  // namespace holdem
