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

#include "holdem/router.hpp"

#include "holdem/errors.hpp"

namespace holdem {
namespace {

Gate make(GateKind k, const SessionContext& ctx) {
  Gate g;
  g.kind = k;
  g.generation = ctx.generation;
  return g;
}

Gate wait(WaitReason r, const SessionContext& ctx) {
  Gate g = make(GateKind::wait, ctx);
  g.wait_reason = r;
  return g;
}

Gate help(std::string reason, TerminationCause cause, const SessionContext& ctx) {
  Gate g = make(GateKind::request_human, ctx);
  g.reason = std::move(reason);
  g.cause = cause;
  return g;
}

Gate terminate(TerminationCause cause, const SessionContext& ctx) {
  Gate g = make(GateKind::terminate, ctx);
  g.cause = cause;
  return g;
}

bool zones_empty(const ParsedState& ps) { return ps.table.my_current_bet.empty() && ps.table.opponent_bet.empty(); }

}  // namespace

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::wait: return "wait";
    case GateKind::verify: return "verify";
    case GateKind::complete: return "complete";
    case GateKind::continue_atom: return "continue_atom";
    case GateKind::recover_retry: return "recover_retry";
    case GateKind::invoke_agent: return "invoke_agent";
    case GateKind::request_human: return "request_human";
    case GateKind::terminate: return "terminate";
  }
  return "wait";
}

std::string_view to_string(WaitReason r) {
  switch (r) {
    case WaitReason::scene: return "scene";
    case WaitReason::acting: return "acting";
    case WaitReason::turn: return "turn";
  }
  return "scene";
}

std::string_view to_string(TerminationCause c) {
  switch (c) {
    case TerminationCause::terminal_outcome: return "terminal_outcome";
    case TerminationCause::scene_unusable: return "scene_unusable";
    case TerminationCause::budget_exhausted: return "budget_exhausted";
    case TerminationCause::human_requested: return "human_requested";
    case TerminationCause::state_limit: return "state_limit";
  }
  return "terminal_outcome";
}

std::optional<TerminationCause> parse_termination_cause(std::string_view text) {
  for (auto c : {TerminationCause::terminal_outcome, TerminationCause::scene_unusable,
                 TerminationCause::budget_exhausted, TerminationCause::human_requested,
                 TerminationCause::state_limit}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string describe(const Gate& g) {
  std::string out(to_string(g.kind));
  switch (g.kind) {
    case GateKind::wait: return out + "(" + std::string(to_string(g.wait_reason)) + ")";
    case GateKind::request_human: return out + "(" + g.reason + ")";
    case GateKind::terminate: return out + "(" + std::string(to_string(g.cause)) + ")";
    case GateKind::invoke_agent: return g.forced ? out + "(forced)" : out;
    case GateKind::verify: return g.verified ? out : out + "(failed)";
    default: return out;
  }
}

bool verification_passes(const ParsedState& ps, const SessionContext& ctx) {
  if (ps.loop_stage != LoopStage::atom_idle) return false;
  if (!ctx.expect) return true;
  return ps.table.my_chips == ctx.expect->my_chips && ps.table.my_current_bet == ctx.expect->my_current_bet &&
         ps.table.opponent_bet == ctx.expect->opponent_bet;
}

Gate route(const ParsedState& ps, const SessionContext& ctx, const Budgets& budgets) {
  check_schema(ps);

  // (1) termination
  if (ctx.terminal) return terminate(ctx.cause.value_or(TerminationCause::terminal_outcome), ctx);
  if (ctx.awaiting_human) return terminate(ctx.pending_cause, ctx);
  const bool settled = ps.loop_stage == LoopStage::win || ps.loop_stage == LoopStage::lose;
  if (settled && zones_empty(ps) && !ctx.plan_pending()) return terminate(TerminationCause::terminal_outcome, ctx);

  // (2) escalation
  if (ps.loop_stage == LoopStage::down) return help("scene", TerminationCause::scene_unusable, ctx);
  if (ctx.consecutive_waits >= budgets.wait_budget) return help("wait_budget", TerminationCause::human_requested, ctx);

  // (3) recovery
  if (ps.loop_stage == LoopStage::to_recover) {
    if (ctx.retry_count < budgets.retry_budget && ctx.last_atom) return make(GateKind::recover_retry, ctx);
    return help("retry_budget", TerminationCause::budget_exhausted, ctx);
  }

  // (4) waits
  if (ps.loop_stage == LoopStage::acting) return wait(WaitReason::acting, ctx);
  if (!ps.table.scene_stable) return wait(WaitReason::scene, ctx);
  if (!ps.table.is_my_turn && !ctx.plan) return wait(WaitReason::turn, ctx);

  // (5) verification and completion
  if (ctx.awaiting_verify) {
    if (ctx.verify_failures > budgets.retry_budget) return help("verification", TerminationCause::human_requested, ctx);
    Gate g = make(GateKind::verify, ctx);
    g.verified = verification_passes(ps, ctx);
    return g;
  }
  if (ctx.plan && ctx.plan->complete()) return make(GateKind::complete, ctx);

  // (6) continuation
  if (ctx.plan_pending()) return make(GateKind::continue_atom, ctx);

  // (7) forced first action
  if (ctx.fresh_game) {
    for (Side side : {Side::left, Side::right}) {
      const auto view = AgentPrimitive::view(side);
      if (!ctx.hole_viewed[static_cast<std::size_t>(side)] && ctx.legal.contains(view)) {
        Gate g = make(GateKind::invoke_agent, ctx);
        g.forced = true;
        g.legal.actions = {view};
        return g;
      }
    }
  }

  // (8) agent decision
  const bool decision_stage = ps.loop_stage == LoopStage::idle || ps.loop_stage == LoopStage::atom_idle ||
                              ps.loop_stage == LoopStage::win;
  if (decision_stage && !ctx.legal.empty()) {
    Gate g = make(GateKind::invoke_agent, ctx);
    g.legal = ctx.legal;
    return g;
  }
  if (ps.loop_stage == LoopStage::lose) return wait(WaitReason::scene, ctx);
  return wait(WaitReason::turn, ctx);
}

SessionContext apply_gate(SessionContext ctx, const Gate& g, const GateEvent& event) {
  if (g.generation != ctx.generation) {
    throw Error(Errc::stale_context, "gate from generation " + std::to_string(g.generation) + ", context at " +
                                         std::to_string(ctx.generation));
  }
  ++ctx.generation;
  ctx.consecutive_waits = g.kind == GateKind::wait ? ctx.consecutive_waits + 1 : 0;

  auto record_dispatch = [&] {
    if (event.plan) ctx.plan = event.plan;
    if (event.dispatched) {
      ctx.last_atom = event.dispatched;
      ctx.awaiting_verify = true;
      ctx.verify_failures = 0;
      ctx.expect = event.expect;
    }
    if (event.cached_side) ctx.hole_viewed[static_cast<std::size_t>(*event.cached_side)] = true;
    // Plans without robot atoms finish inside the state that dispatched them.
    if (ctx.plan && ctx.plan->complete() && !ctx.awaiting_verify) ctx.plan.reset();
  };

  switch (g.kind) {
    case GateKind::wait:
      break;
    case GateKind::verify:
      if (g.verified) {
        ctx.awaiting_verify = false;
        ctx.verify_failures = 0;
        ctx.retry_count = 0;
        ctx.expect.reset();
      } else {
        ++ctx.verify_failures;
      }
      break;
    case GateKind::complete:
      ctx.plan.reset();
      ctx.expect.reset();
      break;
    case GateKind::continue_atom:
      ctx.retry_count = 0;
      record_dispatch();
      break;
    case GateKind::recover_retry:
      ++ctx.retry_count;
      if (event.dispatched) {
        ctx.awaiting_verify = true;
        ctx.verify_failures = 0;
        if (event.expect) ctx.expect = event.expect;
      }
      break;
    case GateKind::invoke_agent:
      if (!g.forced) ctx.fresh_game = false;
      ctx.retry_count = 0;
      record_dispatch();
      break;
    case GateKind::request_human:
      ctx.plan.reset();
      ctx.awaiting_verify = false;
      ctx.awaiting_human = true;
      ctx.pending_cause = g.cause;
      break;
    case GateKind::terminate:
      ctx.terminal = true;
      ctx.cause = g.cause;
      break;
  }
  return ctx;
}

Json encode(const Gate& g) {
  Json j;
  j["kind"] = std::string(to_string(g.kind));
  switch (g.kind) {
    case GateKind::wait: j["reason"] = std::string(to_string(g.wait_reason)); break;
    case GateKind::verify: j["verified"] = g.verified; break;
    case GateKind::invoke_agent: {
      Json legal = Json::array();
      for (const auto& p : g.legal.enumerate()) legal.push_back(to_string(p));
      j["forced"] = g.forced;
      j["legal"] = legal;
      break;
    }
    case GateKind::request_human:
      j["reason"] = g.reason;
      j["cause"] = std::string(to_string(g.cause));
      break;
    case GateKind::terminate: j["cause"] = std::string(to_string(g.cause)); break;
    default: break;
  }
  return j;
}

}  // namespace holdem
