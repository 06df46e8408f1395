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
#include <vector>

#include "holdem/perception_eval.hpp"

namespace holdem {

/// Problem ids of the two chip-state classes in the shipped reference set.
extern const std::vector<int> kOutcomeJudgeIds;
extern const std::vector<int> kTableDecisionIds;
/// table_decision problems whose label board is empty.
extern const std::vector<int> kEmptyBoardIds;

/// Synthetic 36-problem set p1..p36. Labels are projections of generated
/// tables; predictions come from `noise_profile` driven by `seed`.
std::vector<PerceptionProblem> generate_reference_set(const std::string& noise_profile = "gpt55-like",
                                                      std::uint64_t seed = 7);

}  // namespace holdem
