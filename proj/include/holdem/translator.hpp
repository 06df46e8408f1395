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

#include <optional>
#include <string>
#include <vector>

#include "holdem/chip_split.hpp"
#include "holdem/codec.hpp"
#include "holdem/primitives.hpp"
#include "holdem/tabletop.hpp"

namespace holdem {

enum class StepKind { robot_atom, perceive, audio, state_transition };

std::string_view to_string(StepKind k);

struct PlanStep {
  StepKind kind = StepKind::robot_atom;
  RobotPrimitive atom = RobotPrimitive::pick_up_left;  // robot_atom only
  std::string text;                                    // audio line or transition tag

  static PlanStep robot(RobotPrimitive p) { return {StepKind::robot_atom, p, {}}; }
  static PlanStep perceive() { return {StepKind::perceive, RobotPrimitive::pick_up_left, {}}; }
  static PlanStep audio(std::string t) { return {StepKind::audio, RobotPrimitive::pick_up_left, std::move(t)}; }
  static PlanStep transition(std::string t) {
    return {StepKind::state_transition, RobotPrimitive::pick_up_left, std::move(t)};
  }

  friend bool operator==(const PlanStep& a, const PlanStep& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == StepKind::robot_atom) return a.atom == b.atom;
    return a.text == b.text;
  }
};

std::string to_string(const PlanStep& step);

/// Steps produced by one agent primitive. cursor indexes the next pending
/// step; cursor == steps.size() means complete.
struct AtomPlan {
  AgentPrimitive origin;
  std::vector<PlanStep> steps;
  std::size_t cursor = 0;

  bool complete() const { return cursor >= steps.size(); }
  const PlanStep* peek() const { return complete() ? nullptr : &steps[cursor]; }
  std::size_t robot_atom_count() const;

  friend bool operator==(const AtomPlan&, const AtomPlan&) = default;
};

/// Returns the step at the cursor and advances it; nullopt once complete.
std::optional<PlanStep> next_atom(AtomPlan& plan);

/// Throws Errc::illegal_primitive when p is not legal in s, and
/// Errc::not_representable when a chip delta cannot be paid.
AtomPlan translate(const AgentPrimitive& p, const TableState& s);

Json encode(const PlanStep& step);
Json encode(const AtomPlan& plan);
AtomPlan decode_plan(const Json& j);

}  // namespace holdem
