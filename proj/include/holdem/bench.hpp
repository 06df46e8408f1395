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
#include <vector>

#include "holdem/codec.hpp"
#include "holdem/percent.hpp"
#include "holdem/policy_sim.hpp"
#include "holdem/primitives.hpp"
#include "holdem/router.hpp"

namespace holdem {

// ---- primitive schedule -------------------------------------------------

enum class Placement { inventory, left, right };

std::string_view to_string(Placement p);

struct ChipToken {
  Denomination denomination = Denomination::five;
  Placement where = Placement::inventory;
  bool target = false;

  friend bool operator==(const ChipToken&, const ChipToken&) = default;
};

/// Initial layout of one trial. Chip trials list tokens; card trials give
/// the slot and its facing; chained trials start from the end state of the
/// named earlier trial.
struct SceneSpec {
  std::vector<ChipToken> chips;
  std::optional<Side> card_side;
  Facing card_facing = Facing::down;
  std::optional<int> chained_from;  // index into the schedule

  friend bool operator==(const SceneSpec&, const SceneSpec&) = default;
};

struct TrialSpec {
  RobotPrimitive primitive = RobotPrimitive::pick_up_left;
  int repetition = 1;  // 1-based within the primitive
  SceneSpec scene;

  friend bool operator==(const TrialSpec&, const TrialSpec&) = default;
};

inline constexpr int kScheduleSize = 80;

/// 80 specs ordered by primitive id then repetition.
std::vector<TrialSpec> generate_schedule(std::uint64_t seed);

/// Table the trial starts from; pull layouts map the left side to the
/// robot bet zone and the right side to the opponent bet zone.
TableState scene_table(const TrialSpec& spec);

Json encode(const TrialSpec& t);

// ---- outcome aggregation -----------------------------------------------

struct TrialOutcome {
  int trial = 0;
  RobotPrimitive primitive = RobotPrimitive::pick_up_left;
  OutcomeLevel level = OutcomeLevel::SP;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

struct GroupRate {
  int n = 0;
  Ratio spsr;
  Ratio tcr;
};

struct OutcomeReport {
  std::array<int, 4> counts{};  // SP, DC, TF, DF
  int n = 0;
  Ratio spsr;
  Ratio tcr;
  std::array<std::optional<GroupRate>, 4> groups{};  // by PrimitiveGroup
};

/// Rates from raw counts (the reference-table path). Throws Errc::empty_log.
OutcomeReport aggregate_counts(const std::array<int, 4>& counts);

/// Throws Errc::empty_log.
OutcomeReport aggregate_outcomes(const std::vector<TrialOutcome>& log);

/// "47.5/61.2"
std::string format_rate_pair(const Ratio& spsr, const Ratio& tcr);

Json encode(const TrialOutcome& o);
TrialOutcome decode_trial_outcome(const Json& j);
Json encode(const OutcomeReport& r);

struct BenchRun {
  std::vector<TrialOutcome> log;
  OutcomeReport report;
};

/// One sampled outcome per trial, each from its own stream derive_seed(seed, i).
BenchRun run_primitive_bench(const std::vector<TrialSpec>& schedule, const OutcomeProfile& profile,
                             std::uint64_t seed);

// ---- trajectory counters -------------------------------------------------

struct TrajectoryEvent {
  int state_index = 0;
  GateKind gate = GateKind::wait;
  std::string gate_reason;
  std::optional<AgentPrimitive> agent;  // dispatched this state
  std::optional<RobotPrimitive> atom;   // dispatched this state
  bool atom_unresolved = false;         // an atom was dispatched but its identity is unknown
  bool retry = false;
  std::string label;
  // Occupancy for the longest-run counters: the agent primitive and robot
  // atom this state is attributed to. Runs join equal (owner, instance).
  std::string agent_owner;
  int agent_instance = 0;
  std::string atom_owner;
  int atom_instance = 0;

  friend bool operator==(const TrajectoryEvent&, const TrajectoryEvent&) = default;
};

struct CounterReport {
  int states = 0;
  int ap = 0;
  int dpp = 0;
  int wa = 0;
  int hl = 0;
  int rc = 0;
  std::string lap;
  std::string ldp;

  friend bool operator==(const CounterReport&, const CounterReport&) = default;
};

/// Assigns the owner fields of successive events. The agent owner starts at
/// an agent dispatch and lasts until a completion gate (inclusive), the next
/// agent dispatch or termination; the atom owner starts at an atom dispatch
/// and lasts through wait states and retries only.
class OccupancyTracker {
 public:
  void attribute(TrajectoryEvent& e);

 private:
  std::string agent_;
  int agent_instance_ = 0;
  std::string atom_;
  int atom_instance_ = 0;
  int counter_ = 0;
};

/// Throws Errc::non_contiguous unless indices run 0, 1, 2, ...
CounterReport compute_counters(const std::vector<TrajectoryEvent>& events);

/// Parses labelled states into events. Throws Errc::unknown_label.
std::vector<TrajectoryEvent> parse_labels(const std::vector<std::string>& labels);

CounterReport replay_labels(const std::vector<std::string>& labels);

/// Label file: one label per line, '#' comments. Lines "# expect K=V ..."
/// carry reference counters.
struct LabelFile {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> expect;
};

LabelFile read_label_file(const std::string& path);

Json encode(const TrajectoryEvent& e);
TrajectoryEvent decode_event(const Json& j);
Json encode(const CounterReport& r);
CounterReport decode_counter_report(const Json& j);

/// Field name to value, for comparison against reference counters.
std::string counter_field(const CounterReport& r, const std::string& key);

}  // namespace holdem
