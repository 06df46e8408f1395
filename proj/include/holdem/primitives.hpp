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
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "holdem/tabletop.hpp"

namespace holdem {

/// Dexterous-policy primitives. Ids are stable and part of the log format.
enum class RobotPrimitive : int {
  pick_up_left = 0,
  pick_up_right = 1,
  push_5 = 2,
  push_10 = 3,
  push_50 = 4,
  push_100 = 5,
  pull_5 = 6,
  pull_10 = 7,
  pull_50 = 8,
  pull_100 = 9,
  put_down_left = 10,
  put_down_right = 11,
  show_left = 12,
  show_right = 13,
};

inline constexpr int kRobotPrimitiveCount = 14;

enum class PrimitiveGroup { pickup, chip_push, chip_pull, put_down_show };

inline constexpr std::array<PrimitiveGroup, 4> kPrimitiveGroups{
    PrimitiveGroup::pickup, PrimitiveGroup::chip_push, PrimitiveGroup::chip_pull, PrimitiveGroup::put_down_show};

constexpr int id_of(RobotPrimitive p) { return static_cast<int>(p); }
std::optional<RobotPrimitive> robot_primitive_from_id(int id);

std::string_view to_string(RobotPrimitive p);
std::optional<RobotPrimitive> parse_robot_primitive(std::string_view name);
std::string_view instruction_text(RobotPrimitive p);

PrimitiveGroup group_of(RobotPrimitive p);
std::string_view to_string(PrimitiveGroup g);
std::optional<PrimitiveGroup> parse_primitive_group(std::string_view name);

RobotPrimitive push_for(Denomination d);
RobotPrimitive pull_for(Denomination d);
RobotPrimitive pick_up_for(Side s);
RobotPrimitive put_down_for(Side s);
RobotPrimitive show_for(Side s);

/// Denomination moved by a push or pull primitive.
std::optional<Denomination> denomination_of(RobotPrimitive p);
/// Card slot touched by a card primitive.
std::optional<Side> side_of(RobotPrimitive p);

enum class AgentKind {
  wait,
  fold,
  stop,
  reset_to_init,
  view_card,
  show_card,
  put_down_card,
  check,
  call,
  raise,
  all_in,
  collect_winnings,
  request_human,
};

inline constexpr int kAgentPrimitiveCount = 13;

std::string_view to_string(AgentKind k);

/// A high-level action. side is meaningful for the three card kinds, facing
/// for put_down_card, amount for raise (target street bet) and reason for
/// request_human.
struct AgentPrimitive {
  AgentKind kind = AgentKind::wait;
  Side side = Side::left;
  Facing facing = Facing::down;
  int amount = 0;
  std::string reason;

  static AgentPrimitive make(AgentKind k) {
    AgentPrimitive p;
    p.kind = k;
    return p;
  }
  static AgentPrimitive view(Side s) { return with_side(AgentKind::view_card, s); }
  static AgentPrimitive show(Side s) { return with_side(AgentKind::show_card, s); }
  static AgentPrimitive put_down(Side s, Facing f) {
    AgentPrimitive p = with_side(AgentKind::put_down_card, s);
    p.facing = f;
    return p;
  }
  static AgentPrimitive raise_to(int a) {
    AgentPrimitive p = make(AgentKind::raise);
    p.amount = a;
    return p;
  }
  static AgentPrimitive help(std::string why) {
    AgentPrimitive p = make(AgentKind::request_human);
    p.reason = std::move(why);
    return p;
  }

  friend bool operator==(const AgentPrimitive& a, const AgentPrimitive& b);

 private:
  static AgentPrimitive with_side(AgentKind k, Side s) {
    AgentPrimitive p = make(k);
    p.side = s;
    return p;
  }
};

/// "view_card(L)", "raise(105)", "put_down_card(R,up)", "request_human(scene)".
std::string to_string(const AgentPrimitive& p);

/// Inverse of to_string. Returns nullopt for anything outside the grammar.
std::optional<AgentPrimitive> parse_agent_primitive(std::string_view text);

}  // namespace holdem
