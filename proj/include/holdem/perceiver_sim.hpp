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

#include <array>
#include <string>
#include <vector>

#include "holdem/parsed_state.hpp"
#include "holdem/rng.hpp"
#include "holdem/tabletop.hpp"

namespace holdem {

struct NoiseProfile {
  std::string name;
  std::array<double, 8> error_rate{};  // indexed by Field
  bool self_aware = false;             // list corrupted fields in uncertain_fields

  double rate(Field f) const { return error_rate[static_cast<std::size_t>(f)]; }
};

/// Reference field accuracies (percent, LS..SO order) for one perceiver row.
struct PerceiverRow {
  std::string key;
  std::string display;
  std::array<double, 8> accuracy;
  double avg;
  double overall;
};

const std::vector<PerceiverRow>& reference_perceiver_rows();

/// "zero", "<key>-like" for each reference perceiver row (error rate is one
/// minus the accuracy), "uniform-<pct>". Throws Errc::config_unresolvable.
NoiseProfile builtin_noise_profile(const std::string& name);

ParsedState project_truth(const TableState& truth, LoopStage stage, ShowdownOutcome outcome);

struct Perception {
  ParsedState parsed;
  std::array<bool, 8> corrupted{};  // indexed by Field

  bool any_corrupted() const;
};

/// Replaces one field with a schema-valid value that differs from the input.
void corrupt(ParsedState& ps, Field f, Rng& rng);

Perception perceive(const TableState& truth, LoopStage stage, ShowdownOutcome outcome, const NoiseProfile& noise,
                    Rng& rng);

}  // namespace holdem
