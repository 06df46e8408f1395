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
#include <map>
#include <string>
#include <vector>

#include "holdem/codec.hpp"
#include "holdem/primitives.hpp"
#include "holdem/rng.hpp"
#include "holdem/tabletop.hpp"

namespace holdem {

/// (p_SP, p_DC, p_TF, p_DF); non-negative, summing to 1 within 1e-9.
using Quadruple = std::array<double, 4>;

bool valid_quadruple(const Quadruple& q);

struct OutcomeProfile {
  std::string name;
  std::array<Quadruple, kRobotPrimitiveCount> per_primitive{};
  int settle_delay = 1;   // captures the scene stays unstable after a completed atom
  int acting_delay = 0;   // captures the robot is still seen acting
  bool dc_continuable = false;  // treat DC like SP for routing (sensitivity mode)

  const Quadruple& of(RobotPrimitive p) const { return per_primitive[id_of(p)]; }
  static OutcomeProfile uniform(std::string name, const Quadruple& q);
};

/// Built-in names: "all-sp", "<row>-aggregate" and "<row>-groups" for each
/// reference policy row (pi05, pi0, rdt, dp-dino, dp-transformer, rdt-small,
/// act, baku, dp-unet), and "tf-<pct>" with TF probability pct/100.
/// Throws Errc::config_unresolvable.
OutcomeProfile builtin_outcome_profile(const std::string& name);
std::vector<std::string> builtin_outcome_profile_names();

/// Reference (SP, DC, TF, DF) counts over 80 trials for one policy row.
struct PolicyRow {
  std::string key;
  std::string display;
  std::array<int, 4> counts;
  std::array<std::array<double, 2>, 4> groups;  // SPSR/TCR per group, percent
};

const std::vector<PolicyRow>& reference_policy_rows();

OutcomeLevel sample_outcome(RobotPrimitive prim, const OutcomeProfile& prof, Rng& rng);

struct AtomResult {
  TableState truth;
  LoopStage stage;
};

/// Applies a sampled outcome. SP and DC apply the nominal effect; TF and DF
/// leave the table untouched. Throws Errc::effect_inapplicable when the
/// nominal effect has nothing to act on.
AtomResult execute_atom(TableState truth, RobotPrimitive prim, OutcomeLevel outcome);

/// Nominal effect alone (the SP post-state), used for verification targets.
TableState nominal_effect(TableState truth, RobotPrimitive prim);

Json encode(const OutcomeProfile& p);
OutcomeProfile decode_outcome_profile(const Json& j);

}  // namespace holdem
