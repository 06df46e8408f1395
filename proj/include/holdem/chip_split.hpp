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

#include <vector>

#include "holdem/tabletop.hpp"

namespace holdem {

inline constexpr int kSmallBlind = 5;
inline constexpr int kBigBlind = 10;

/// Fewest chips from `inventory` summing to `delta`, largest denomination
/// first. Throws Errc::not_representable when delta is negative, not a
/// multiple of 5, or not reachable within the inventory.
std::vector<Denomination> split_chips(int delta, const ChipCount& inventory);

/// Same split as a count map; nullopt instead of throwing.
std::optional<ChipCount> try_split(int delta, const ChipCount& inventory);

ChipCount to_counts(const std::vector<Denomination>& chips);

}  // namespace holdem
