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
#include <cstdint>
#include <optional>
#include <string>

#include "holdem/parsed_state.hpp"
#include "holdem/poker.hpp"
#include "holdem/translator.hpp"

namespace holdem {

enum class GateKind { wait, verify, complete, continue_atom, recover_retry, invoke_agent, request_human, terminate };
enum class WaitReason { scene, acting, turn };
enum class TerminationCause { terminal_outcome, scene_unusable, budget_exhausted, human_requested, state_limit };

std::string_view to_string(GateKind k);
std::string_view to_string(WaitReason r);
std::string_view to_string(TerminationCause c);
std::optional<TerminationCause> parse_termination_cause(std::string_view text);

struct Budgets {
  int wait_budget = 4;   // consecutive wait gates before escalation
  int retry_budget = 1;  // retries per atom, also failed verifications tolerated
};

/// Post-condition the next observation must show after an atom succeeds.
struct Expectation {
  ChipCount my_chips;
  ChipCount my_current_bet;
  ChipCount opponent_bet;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

/// One routing decision. Only the members relevant to `kind` are meaningful.
struct Gate {
  GateKind kind = GateKind::wait;
  WaitReason wait_reason = WaitReason::scene;
  LegalSet legal;              // invoke_agent
  bool forced = false;         // invoke_agent resolved by rule; legal holds the one choice
  bool verified = false;       // verify
  std::string reason;          // request_human
  TerminationCause cause = TerminationCause::terminal_outcome;  // request_human, terminate
  std::uint64_t generation = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// "wait(scene)", "verify", "invoke_agent", "request_human(verification)", ...
std::string describe(const Gate& g);

struct SessionContext {
  std::optional<AtomPlan> plan;
  std::optional<RobotPrimitive> last_atom;
  bool awaiting_verify = false;
  std::optional<Expectation> expect;
  int verify_failures = 0;
  int consecutive_waits = 0;
  int retry_count = 0;
  bool fresh_game = true;
  std::array<bool, 2> hole_viewed{};
  bool awaiting_human = false;
  TerminationCause pending_cause = TerminationCause::human_requested;
  bool terminal = false;
  std::optional<TerminationCause> cause;
  LegalSet legal;  // filled from ground truth before each route
  std::uint64_t generation = 0;

  bool plan_pending() const { return plan && !plan->complete(); }

  friend bool operator==(const SessionContext&, const SessionContext&) = default;
};

/// What the caller did with a gate, fed back into apply_gate.
struct GateEvent {
  std::optional<AtomPlan> plan;             // plan after this state's dispatch
  std::optional<RobotPrimitive> dispatched; // robot atom sent this state
  std::optional<Expectation> expect;        // post-condition of that atom
  bool cached_card = false;                 // a perceive step ran
  std::optional<Side> cached_side;
};

/// Ordered decision procedure; exactly one gate for every schema-valid
/// input. Throws Errc::schema_invalid.
Gate route(const ParsedState& ps, const SessionContext& ctx, const Budgets& budgets);

/// Throws Errc::stale_context if g was routed on another generation.
SessionContext apply_gate(SessionContext ctx, const Gate& g, const GateEvent& event);

/// True iff the observation satisfies the pending post-condition.
bool verification_passes(const ParsedState& ps, const SessionContext& ctx);

Json encode(const Gate& g);

}  // namespace holdem
