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

#include "holdem/translator.hpp"

#include "holdem/errors.hpp"
#include "holdem/poker.hpp"

namespace holdem {
namespace {

void push_chips(AtomPlan& plan, int delta, const ChipCount& inventory) {
  for (auto d : split_chips(delta, inventory)) plan.steps.push_back(PlanStep::robot(push_for(d)));
}

bool is_betting(AgentKind k) {
  switch (k) {
    case AgentKind::fold:
    case AgentKind::check:
    case AgentKind::call:
    case AgentKind::raise:
    case AgentKind::all_in:
    case AgentKind::view_card:
    case AgentKind::show_card:
    case AgentKind::put_down_card:
    case AgentKind::collect_winnings: return true;
    default: return false;
  }
}

}  // namespace

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::robot_atom: return "robot_atom";
    case StepKind::perceive: return "perceive";
    case StepKind::audio: return "audio";
    case StepKind::state_transition: return "state_transition";
  }
  return "robot_atom";
}

std::string to_string(const PlanStep& step) {
  switch (step.kind) {
    case StepKind::robot_atom: return std::string(to_string(step.atom));
    case StepKind::perceive: return "perceive";
    case StepKind::audio: return "audio(" + step.text + ")";
    case StepKind::state_transition: return "transition(" + step.text + ")";
  }
  return {};
}

std::size_t AtomPlan::robot_atom_count() const {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.kind == StepKind::robot_atom;
  return n;
}

std::optional<PlanStep> next_atom(AtomPlan& plan) {
  if (plan.complete()) return std::nullopt;
  return plan.steps[plan.cursor++];
}

AtomPlan translate(const AgentPrimitive& p, const TableState& s) {
  if (is_betting(p.kind) && (!s.is_robot_turn || !legal_actions(s).contains(p))) {
    throw Error(Errc::illegal_primitive, to_string(p) + " is not legal in this state");
  }
  AtomPlan plan;
  plan.origin = p;
  switch (p.kind) {
    case AgentKind::wait: plan.steps.push_back(PlanStep::transition("sleep")); break;
    case AgentKind::fold: plan.steps.push_back(PlanStep::transition("fold")); break;
    case AgentKind::stop: plan.steps.push_back(PlanStep::transition("terminate")); break;
    case AgentKind::reset_to_init: plan.steps.push_back(PlanStep::transition("home_pose")); break;
    case AgentKind::view_card:
      plan.steps = {PlanStep::robot(pick_up_for(p.side)), PlanStep::perceive(), PlanStep::robot(put_down_for(p.side))};
      break;
    case AgentKind::show_card:
      plan.steps = {PlanStep::robot(pick_up_for(p.side)), PlanStep::robot(show_for(p.side))};
      break;
    case AgentKind::put_down_card:
      plan.steps = {PlanStep::robot(p.facing == Facing::up ? show_for(p.side) : put_down_for(p.side))};
      break;
    case AgentKind::check: plan.steps.push_back(PlanStep::audio("Check")); break;
    case AgentKind::call: push_chips(plan, to_call(s, Seat::robot), s.robot_inventory); break;
    case AgentKind::raise: push_chips(plan, p.amount - street_bet(s, Seat::robot), s.robot_inventory); break;
    case AgentKind::all_in: push_chips(plan, s.robot_inventory.value(), s.robot_inventory); break;
    case AgentKind::collect_winnings:
      for (auto d : kDescending) {
        for (int i = 0; i < s.robot_bet_zone[d]; ++i) plan.steps.push_back(PlanStep::robot(pull_for(d)));
        for (int i = 0; i < s.opponent_bet_zone[d]; ++i) plan.steps.push_back(PlanStep::robot(pull_for(d)));
      }
      break;
    case AgentKind::request_human:
      plan.steps = {PlanStep::audio(p.reason.empty() ? "help" : p.reason), PlanStep::transition("down")};
      break;
  }
  return plan;
}

Json encode(const PlanStep& step) {
  Json j;
  j["kind"] = std::string(to_string(step.kind));
  if (step.kind == StepKind::robot_atom) {
    j["id"] = id_of(step.atom);
    j["name"] = std::string(to_string(step.atom));
  } else if (step.kind != StepKind::perceive) {
    j["text"] = step.text;
  }
  return j;
}

Json encode(const AtomPlan& plan) {
  Json j;
  j["origin"] = to_string(plan.origin);
  Json steps = Json::array();
  for (const auto& s : plan.steps) steps.push_back(encode(s));
  j["steps"] = steps;
  j["cursor"] = plan.cursor;
  return j;
}

AtomPlan decode_plan(const Json& j) {
  return decoding([&] {
  AtomPlan plan;
  const Json& origin = require(j, "origin");
  auto p = origin.is_string() ? parse_agent_primitive(origin.get<std::string>()) : std::nullopt;
  if (!p) throw Error(Errc::malformed_document, "bad plan origin");
  plan.origin = *p;
  const Json& steps = require(j, "steps");
  if (!steps.is_array()) throw Error(Errc::malformed_document, "steps must be an array");
  for (const auto& sj : steps) {
    const std::string kind = require(sj, "kind").get<std::string>();
    if (kind == "robot_atom") {
      auto atom = robot_primitive_from_id(require(sj, "id").get<int>());
      if (!atom) throw Error(Errc::malformed_document, "bad atom id");
      plan.steps.push_back(PlanStep::robot(*atom));
    } else if (kind == "perceive") {
      plan.steps.push_back(PlanStep::perceive());
    } else if (kind == "audio") {
      plan.steps.push_back(PlanStep::audio(require(sj, "text").get<std::string>()));
    } else if (kind == "state_transition") {
      plan.steps.push_back(PlanStep::transition(require(sj, "text").get<std::string>()));
    } else {
      throw Error(Errc::malformed_document, "unknown step kind '" + kind + "'");
    }
  }
  plan.cursor = require(j, "cursor").get<std::size_t>();
  if (plan.cursor > plan.steps.size()) throw Error(Errc::malformed_document, "cursor past end");
  return plan;
  });
}

}  // namespace holdem
