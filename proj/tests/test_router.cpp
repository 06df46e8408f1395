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

#include <gtest/gtest.h>

#include "holdem/errors.hpp"
#include "holdem/router.hpp"

using namespace holdem;

namespace {

ParsedState parsed(LoopStage stage, bool my_turn = true, bool stable = true) {
  ParsedState ps;
  ps.loop_stage = stage;
  ps.table.is_my_turn = my_turn;
  ps.table.scene_stable = stable;
  ps.table.my_chips = ChipCount{4, 3, 3, 3};
  ps.table.opponent_chips = ChipCount{4, 4, 3, 3};
  return ps;
}

LegalSet betting() {
  LegalSet l;
  l.actions = {AgentPrimitive::make(AgentKind::check)};
  l.raise_targets = {10, 20};
  return l;
}

AtomPlan pending_plan() {
  AtomPlan p;
  p.origin = AgentPrimitive::raise_to(15);
  p.steps = {PlanStep::robot(RobotPrimitive::push_10), PlanStep::robot(RobotPrimitive::push_5)};
  p.cursor = 1;
  return p;
}

}  // namespace

TEST(Router, TotalOverTheInputGrid) {
  const Budgets budgets;
  int routed = 0;
  for (LoopStage stage : kLoopStages) {
    for (int bits = 0; bits < (1 << 9); ++bits) {
      const bool my_turn = bits & 1, stable = bits & 2;
      SessionContext ctx;
      if (bits & 4) ctx.plan = pending_plan();
      ctx.awaiting_verify = bits & 8;
      ctx.consecutive_waits = bits & 16 ? budgets.wait_budget : 0;
      ctx.retry_count = bits & 32 ? budgets.retry_budget : 0;
      if (bits & 64) ctx.last_atom = RobotPrimitive::push_10;
      ctx.fresh_game = bits & 128;
      if (bits & 256) ctx.legal = betting();
      for (int flags = 0; flags < 3; ++flags) {
        SessionContext c = ctx;
        c.terminal = flags == 1;
        c.awaiting_human = flags == 2;
        const ParsedState ps = parsed(stage, my_turn, stable);
        const Gate g = route(ps, c, budgets);
        EXPECT_EQ(g, route(ps, c, budgets));
        EXPECT_EQ(g.generation, c.generation);
        if (g.kind == GateKind::invoke_agent) {
          EXPECT_FALSE(g.legal.empty());
        }
        if (c.terminal || c.awaiting_human) {
          EXPECT_EQ(g.kind, GateKind::terminate);
        }
        // apply_gate accepts every routed gate.
        EXPECT_NO_THROW(apply_gate(c, g, GateEvent{}));
        ++routed;
      }
    }
  }
  EXPECT_EQ(routed, 7 * 512 * 3);
}

TEST(Router, PrecedenceExamples) {
  const Budgets b;
  SessionContext ctx;
  ctx.legal = betting();
  ctx.fresh_game = false;
  EXPECT_EQ(route(parsed(LoopStage::down), ctx, b).kind, GateKind::request_human);
  EXPECT_EQ(route(parsed(LoopStage::down), ctx, b).cause, TerminationCause::scene_unusable);
  EXPECT_EQ(route(parsed(LoopStage::acting), ctx, b).wait_reason, WaitReason::acting);
  EXPECT_EQ(route(parsed(LoopStage::idle, true, false), ctx, b).wait_reason, WaitReason::scene);
  EXPECT_EQ(route(parsed(LoopStage::idle, false), ctx, b).wait_reason, WaitReason::turn);
  EXPECT_EQ(route(parsed(LoopStage::idle), ctx, b).kind, GateKind::invoke_agent);

  SessionContext waiting = ctx;
  waiting.consecutive_waits = b.wait_budget;
  const Gate help = route(parsed(LoopStage::idle, false), waiting, b);
  EXPECT_EQ(help.kind, GateKind::request_human);
  EXPECT_EQ(help.reason, "wait_budget");
}

TEST(Router, RecoveryRetriesThenEscalates) {
  const Budgets b;
  SessionContext ctx;
  ctx.last_atom = RobotPrimitive::push_10;
  EXPECT_EQ(route(parsed(LoopStage::to_recover), ctx, b).kind, GateKind::recover_retry);
  ctx.retry_count = b.retry_budget;
  const Gate g = route(parsed(LoopStage::to_recover), ctx, b);
  EXPECT_EQ(g.kind, GateKind::request_human);
  EXPECT_EQ(g.cause, TerminationCause::budget_exhausted);
}

TEST(Router, ForcedFirstViewOnFreshGame) {
  SessionContext ctx;
  ctx.legal = betting();
  ctx.legal.actions.push_back(AgentPrimitive::view(Side::left));
  ctx.legal.actions.push_back(AgentPrimitive::view(Side::right));
  const Gate g = route(parsed(LoopStage::idle), ctx, Budgets{});
  EXPECT_TRUE(g.forced);
  ASSERT_EQ(g.legal.actions.size(), 1u);
  EXPECT_EQ(g.legal.actions[0], AgentPrimitive::view(Side::left));
  ctx.hole_viewed[0] = true;
  EXPECT_EQ(route(parsed(LoopStage::idle), ctx, Budgets{}).legal.actions[0], AgentPrimitive::view(Side::right));
}

TEST(Router, VerifyThenContinueThenComplete) {
  const Budgets b;
  SessionContext ctx;
  ctx.plan = pending_plan();
  ctx.awaiting_verify = true;
  ctx.expect = Expectation{ChipCount{4, 3, 3, 3}, {}, {}};
  Gate g = route(parsed(LoopStage::atom_idle), ctx, b);
  ASSERT_EQ(g.kind, GateKind::verify);
  EXPECT_TRUE(g.verified);
  ctx = apply_gate(ctx, g, {});
  EXPECT_FALSE(ctx.awaiting_verify);
  g = route(parsed(LoopStage::atom_idle), ctx, b);
  EXPECT_EQ(g.kind, GateKind::continue_atom);
  GateEvent ev;
  AtomPlan done = *ctx.plan;
  done.cursor = done.steps.size();
  ev.plan = done;
  ev.dispatched = RobotPrimitive::push_5;
  ctx = apply_gate(ctx, g, ev);
  EXPECT_TRUE(ctx.awaiting_verify);
  ctx.expect.reset();
  g = route(parsed(LoopStage::atom_idle), ctx, b);
  ctx = apply_gate(ctx, g, {});
  EXPECT_EQ(route(parsed(LoopStage::atom_idle), ctx, b).kind, GateKind::complete);
}

TEST(Router, FailedVerificationEscalatesAfterBudget) {
  Budgets b;
  SessionContext ctx;
  ctx.plan = pending_plan();
  ctx.awaiting_verify = true;
  ctx.expect = Expectation{ChipCount{9, 9, 9, 9}, {}, {}};
  for (int i = 0; i <= b.retry_budget; ++i) {
    const Gate g = route(parsed(LoopStage::atom_idle), ctx, b);
    ASSERT_EQ(g.kind, GateKind::verify);
    EXPECT_FALSE(g.verified);
    ctx = apply_gate(ctx, g, {});
  }
  EXPECT_EQ(route(parsed(LoopStage::atom_idle), ctx, b).reason, "verification");
}

TEST(Router, StaleGatesAreRejected) {
  SessionContext ctx;
  const Gate g = route(parsed(LoopStage::idle, false), ctx, Budgets{});
  const SessionContext next = apply_gate(ctx, g, {});
  try {
    apply_gate(next, g, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::stale_context);
  }
}

TEST(Router, SettledWithEmptyZonesTerminates) {
  SessionContext ctx;
  ParsedState ps = parsed(LoopStage::win);
  ps.showdown_outcome = ShowdownOutcome::win;
  const Gate g = route(ps, ctx, Budgets{});
  EXPECT_EQ(g.kind, GateKind::terminate);
  EXPECT_EQ(g.cause, TerminationCause::terminal_outcome);
}
