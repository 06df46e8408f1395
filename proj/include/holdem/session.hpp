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
#include <optional>
#include <string>
#include <vector>

#include "holdem/agents.hpp"
#include "holdem/bench.hpp"
#include "holdem/perceiver_sim.hpp"
#include "holdem/policy_sim.hpp"
#include "holdem/router.hpp"
#include "holdem/tabletop.hpp"

namespace holdem {

/// What happens after a request_human gate. terminate ends the session on the
/// next state; auto_ack has the operator restore the table at once; console
/// pauses until an ack message arrives.
enum class HumanHelp { terminate, auto_ack, console };

std::string_view to_string(HumanHelp h);

struct SessionSeeds {
  std::uint64_t policy = 0;
  std::uint64_t perceiver = 0;
  std::uint64_t agents = 0;

  friend bool operator==(const SessionSeeds&, const SessionSeeds&) = default;
};

struct SessionConfig {
  TableConfig table;
  SessionSeeds seeds;
  std::string outcome_profile = "all-sp";
  std::optional<OutcomeProfile> outcome_override;  // inline profile document
  std::string noise_profile = "zero";
  Budgets budgets;
  AgentSpec robot_agent = AgentSpec::heuristic();
  AgentSpec opponent_agent = AgentSpec::heuristic();
  int max_states = 200;
  int opponent_delay = 1;  // captures the opponent deliberates before acting
  ShowdownOutcome tie_outcome = ShowdownOutcome::win;
  HumanHelp human_help = HumanHelp::terminate;
  bool carry_inventories = false;  // multi-hand matches
};

Json encode(const SessionConfig& c);
/// Missing keys take defaults. Throws Errc::config_unresolvable.
SessionConfig decode_session_config(const Json& j);

/// The outcome profile a config names; throws Errc::config_unresolvable.
OutcomeProfile resolve_outcome_profile(const SessionConfig& c);

/// One captured state with everything needed to audit it afterwards.
struct StateRecord {
  int index = 0;
  TableState truth;       // at capture
  LoopStage stage = LoopStage::idle;
  ParsedState parsed;     // after noise
  std::array<bool, 8> corrupted{};
  Gate gate;
  std::string clean_gate;  // gate the noiseless view would have produced
  std::vector<std::string> steps;
  std::optional<RobotPrimitive> atom;
  std::optional<OutcomeLevel> outcome;
  std::vector<std::string> notes;
};

Json encode(const StateRecord& s);

struct SessionRecord {
  SessionConfig config;
  std::vector<TrajectoryEvent> events;
  std::vector<StateRecord> states;
  TableState final_truth;
  CounterReport counters;
  TerminationCause cause = TerminationCause::state_limit;
  std::optional<HandResult> result;
};

Json encode(const SessionRecord& r);

enum class FailureCategory { perception, routing_decision, policy_execution, verification, disruptive_scene };

std::string_view to_string(FailureCategory c);

/// Counts per category; categories without entries are absent.
std::map<FailureCategory, int> classify_failure(const SessionRecord& r);

Json encode(const std::map<FailureCategory, int>& failures);

/// One hand, stepped one captured state at a time. Not thread-safe; callers
/// serialize access.
class Session {
 public:
  /// Throws Errc::config_unresolvable.
  explicit Session(SessionConfig cfg);

  bool done() const { return done_; }
  /// Runs one capture-perceive-route-execute cycle. No-op once done.
  void step();
  /// Steps until done or blocked on the console.
  void run();

  /// Console opponent has the turn and has not acted yet.
  bool blocked_on_opponent() const;
  /// A help request is waiting for a console ack.
  bool blocked_on_human() const;
  bool blocked() const { return blocked_on_opponent() || blocked_on_human(); }

  /// Console opponent input. Throws Errc::out_of_turn or Errc::illegal_primitive.
  void submit_opponent_action(const AgentPrimitive& p);
  /// Throws Errc::malformed when no help request is pending.
  void acknowledge_help();
  /// The opponent concedes: it folds at the next state boundary where the
  /// robot has no plan in flight.
  void resign();

  const TableState& truth() const { return truth_; }
  const SessionContext& context() const { return ctx_; }
  LoopStage true_stage() const;
  int states() const { return static_cast<int>(record_.states.size()); }
  const SessionRecord& record() const { return record_; }
  /// Finalized record (counters computed). Valid once done.
  SessionRecord finish() const;

 private:
  struct Physical {
    int acting_left = 0;
    int unstable_left = 0;
    bool to_recover = false;
    bool down = false;
  };
  struct Dispatch {
    std::optional<RobotPrimitive> atom;
    std::optional<OutcomeLevel> outcome;
    std::optional<Expectation> expect;
    std::optional<Side> cached;
    bool stop = false;
  };

  void capture(StateRecord& rec);
  void opponent_turn(StateRecord& rec);
  Dispatch dispatch(AtomPlan& plan, StateRecord& rec);
  Dispatch run_atom(RobotPrimitive atom, StateRecord& rec);
  void commit(const AgentPrimitive& p, StateRecord& rec);
  void restore_after_help(std::vector<std::string>& notes);
  ShowdownOutcome true_outcome() const;
  DecisionRequest robot_request(const ParsedState& ps) const;
  DecisionRequest opponent_request() const;
  void finish_state(StateRecord rec, TrajectoryEvent ev);

  SessionConfig cfg_;
  OutcomeProfile profile_;
  NoiseProfile noise_;
  ChipCount totals_;
  TableState truth_;
  TableState plan_snapshot_;
  SessionContext ctx_;
  Physical phys_;
  Agent robot_;
  Agent opponent_;
  Rng policy_rng_;
  Rng perceiver_rng_;
  std::array<std::optional<Card>, 2> cached_{};
  int opponent_wait_ = 0;
  std::optional<AgentPrimitive> queued_opponent_;
  bool resign_pending_ = false;
  bool help_ack_pending_ = false;
  OccupancyTracker tracker_;
  SessionRecord record_;
  std::vector<std::string> pending_notes_;
  bool acting_now_ = false;
  bool done_ = false;
};

/// Throws Errc::config_unresolvable.
SessionRecord run_hand(const SessionConfig& cfg);

/// Consecutive hands; with carry_inventories each hand starts from the
/// previous hand's final inventories. Deck seeds advance per hand.
std::vector<SessionRecord> run_match(const SessionConfig& cfg, int hands);

/// Opponent-facing view: public cards only, both zones and inventories.
Json public_view(const TableState& truth, LoopStage stage);

}  // namespace holdem
