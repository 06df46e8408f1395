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

#include "holdem/primitives.hpp"

#include <charconv>

namespace holdem {
namespace {

struct RobotInfo {
  std::string_view name;
  std::string_view instruction;
};

constexpr std::array<RobotInfo, kRobotPrimitiveCount> kRobot{{
    {"pick_up_left", "Pick up the card on the left side."},
    {"pick_up_right", "Pick up the card on the right side."},
    {"push_5", "Push forward the chips worth 5."},
    {"push_10", "Push forward the chips worth 10."},
    {"push_50", "Push forward the chips worth 50."},
    {"push_100", "Push forward the chips worth 100."},
    {"pull_5", "Pull back the chips worth 5."},
    {"pull_10", "Pull back the chips worth 10."},
    {"pull_50", "Pull back the chips worth 50."},
    {"pull_100", "Pull back the chips worth 100."},
    {"put_down_left", "Place the held card onto the left position."},
    {"put_down_right", "Place the held card onto the right position."},
    {"show_left", "Reveal the face of the left card."},
    {"show_right", "Reveal the face of the right card."},
}};

constexpr std::array<std::string_view, kAgentPrimitiveCount> kAgentNames{
    "wait", "fold",  "stop", "reset_to_init", "view_card", "show_card",       "put_down_card",
    "check", "call", "raise", "all_in",      "collect_winnings", "request_human"};

constexpr std::array<std::string_view, 4> kGroupNames{"pickup", "chip_push", "chip_pull", "put_down_show"};

std::size_t slot(Denomination d) {
  switch (d) {
    case Denomination::five: return 0;
    case Denomination::ten: return 1;
    case Denomination::fifty: return 2;
    case Denomination::hundred: return 3;
  }
  return 0;
}

std::optional<Side> parse_side(std::string_view t) {
  if (t == "L") return Side::left;
  if (t == "R") return Side::right;
  return std::nullopt;
}

}  // namespace

std::optional<RobotPrimitive> robot_primitive_from_id(int id) {
  if (id < 0 || id >= kRobotPrimitiveCount) return std::nullopt;
  return static_cast<RobotPrimitive>(id);
}

std::string_view to_string(RobotPrimitive p) { return kRobot[id_of(p)].name; }
std::string_view instruction_text(RobotPrimitive p) { return kRobot[id_of(p)].instruction; }

std::optional<RobotPrimitive> parse_robot_primitive(std::string_view name) {
  for (int i = 0; i < kRobotPrimitiveCount; ++i) {
    if (kRobot[i].name == name) return static_cast<RobotPrimitive>(i);
  }
  return std::nullopt;
}

PrimitiveGroup group_of(RobotPrimitive p) {
  const int id = id_of(p);
  if (id <= 1) return PrimitiveGroup::pickup;
  if (id <= 5) return PrimitiveGroup::chip_push;
  if (id <= 9) return PrimitiveGroup::chip_pull;
  return PrimitiveGroup::put_down_show;
}

std::string_view to_string(PrimitiveGroup g) { return kGroupNames[static_cast<std::size_t>(g)]; }

std::optional<PrimitiveGroup> parse_primitive_group(std::string_view name) {
  for (std::size_t i = 0; i < kGroupNames.size(); ++i) {
    if (kGroupNames[i] == name) return static_cast<PrimitiveGroup>(i);
  }
  return std::nullopt;
}

RobotPrimitive push_for(Denomination d) { return static_cast<RobotPrimitive>(2 + slot(d)); }
RobotPrimitive pull_for(Denomination d) { return static_cast<RobotPrimitive>(6 + slot(d)); }
RobotPrimitive pick_up_for(Side s) { return s == Side::left ? RobotPrimitive::pick_up_left : RobotPrimitive::pick_up_right; }
RobotPrimitive put_down_for(Side s) { return s == Side::left ? RobotPrimitive::put_down_left : RobotPrimitive::put_down_right; }
RobotPrimitive show_for(Side s) { return s == Side::left ? RobotPrimitive::show_left : RobotPrimitive::show_right; }

std::optional<Denomination> denomination_of(RobotPrimitive p) {
  const int id = id_of(p);
  if (id >= 2 && id <= 9) return kAscending[(id - 2) % 4];
  return std::nullopt;
}

std::optional<Side> side_of(RobotPrimitive p) {
  switch (p) {
    case RobotPrimitive::pick_up_left:
    case RobotPrimitive::put_down_left:
    case RobotPrimitive::show_left: return Side::left;
    case RobotPrimitive::pick_up_right:
    case RobotPrimitive::put_down_right:
    case RobotPrimitive::show_right: return Side::right;
    default: return std::nullopt;
  }
}

std::string_view to_string(AgentKind k) { return kAgentNames[static_cast<std::size_t>(k)]; }

bool operator==(const AgentPrimitive& a, const AgentPrimitive& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AgentKind::view_card:
    case AgentKind::show_card: return a.side == b.side;
    case AgentKind::put_down_card: return a.side == b.side && a.facing == b.facing;
    case AgentKind::raise: return a.amount == b.amount;
    case AgentKind::request_human: return a.reason == b.reason;
    default: return true;
  }
}

std::string to_string(const AgentPrimitive& p) {
  std::string out(to_string(p.kind));
  switch (p.kind) {
    case AgentKind::view_card:
    case AgentKind::show_card: return out + "(" + std::string(side_letter(p.side)) + ")";
    case AgentKind::put_down_card:
      return out + "(" + std::string(side_letter(p.side)) + "," + std::string(to_string(p.facing)) + ")";
    case AgentKind::raise: return out + "(" + std::to_string(p.amount) + ")";
    case AgentKind::request_human: return p.reason.empty() ? out : out + "(" + p.reason + ")";
    default: return out;
  }
}

std::optional<AgentPrimitive> parse_agent_primitive(std::string_view text) {
  const auto open = text.find('(');
  const std::string_view head = text.substr(0, open);
  std::string_view arg;
  if (open != std::string_view::npos) {
    if (text.back() != ')') return std::nullopt;
    arg = text.substr(open + 1, text.size() - open - 2);
  }
  std::optional<AgentKind> kind;
  for (std::size_t i = 0; i < kAgentNames.size(); ++i) {
    if (kAgentNames[i] == head) kind = static_cast<AgentKind>(i);
  }
  if (!kind) return std::nullopt;
  const bool has_arg = open != std::string_view::npos;
  AgentPrimitive p = AgentPrimitive::make(*kind);
  switch (*kind) {
    case AgentKind::view_card:
    case AgentKind::show_card: {
      auto s = parse_side(arg);
      if (!s) return std::nullopt;
      p.side = *s;
      return p;
    }
    case AgentKind::put_down_card: {
      const auto comma = arg.find(',');
      auto s = parse_side(arg.substr(0, comma));
      if (!s) return std::nullopt;
      p.side = *s;
      if (comma == std::string_view::npos) return p;
      const auto f = arg.substr(comma + 1);
      if (f == "up") p.facing = Facing::up;
      else if (f == "down") p.facing = Facing::down;
      else return std::nullopt;
      return p;
    }
    case AgentKind::raise: {
      int a = 0;
      auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), a);
      if (!has_arg || ec != std::errc() || ptr != arg.data() + arg.size() || a < 0) return std::nullopt;
      p.amount = a;
      return p;
    }
    case AgentKind::request_human:
      p.reason = std::string(arg);
      return p;
    default:
      if (has_arg) return std::nullopt;
      return p;
  }
}

}  // namespace holdem
