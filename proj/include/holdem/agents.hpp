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
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "holdem/codec.hpp"
#include "holdem/parsed_state.hpp"
#include "holdem/poker.hpp"
#include "holdem/rng.hpp"

namespace holdem {

/// Everything a decision maker sees at one decision point. For the robot
/// seat the hole cards are the cached reads; for the opponent they are its
/// own cards. parsed is always from the deciding seat's point of view.
struct DecisionRequest {
  ParsedState parsed;
  std::array<std::optional<Card>, 2> hole{};
  LegalSet legal;
  Street street = Street::preflop;
  int pot = 0;
};

Json encode(const DecisionRequest& r);
DecisionRequest decode_decision_request(const Json& j);

enum class AgentType { scripted, heuristic, external, console };

std::string_view to_string(AgentType t);

struct HeuristicThresholds {
  double fold_below = 0.3;   // facing a bet
  double raise_from = 0.7;
  double all_in_from = 0.95;
  int trials = 2000;         // Monte Carlo samples when enumeration is too large

  friend bool operator==(const HeuristicThresholds&, const HeuristicThresholds&) = default;
};

struct AgentSpec {
  AgentType type = AgentType::heuristic;
  std::vector<AgentPrimitive> script;
  HeuristicThresholds thresholds;
  std::string endpoint;  // host:port
  int timeout_ms = 30000;

  static AgentSpec scripted(std::vector<AgentPrimitive> script);
  static AgentSpec heuristic(HeuristicThresholds t = {});

  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

Json encode(const AgentSpec& a);
AgentSpec decode_agent_spec(const Json& j);

struct Decision {
  AgentPrimitive primitive;
  std::vector<std::string> warnings;
  std::optional<Errc> fallback;  // script_exhausted or external_timeout
};

/// A stateful decision maker for one seat. Scripted agents consume their list
/// in order; entries that are not legal when reached are skipped.
class Agent {
 public:
  explicit Agent(AgentSpec spec, std::uint64_t seed = 0);

  /// Always returns a member of req.legal, or request_human after an
  /// external failure. Throws Errc::illegal_primitive on an empty legal set.
  Decision decide(const DecisionRequest& req);

  const AgentSpec& spec() const { return spec_; }
  std::size_t script_position() const { return cursor_; }

 private:
  Decision decide_scripted(const DecisionRequest& req);
  Decision decide_heuristic(const DecisionRequest& req);
  Decision decide_external(const DecisionRequest& req);

  AgentSpec spec_;
  Rng rng_;
  std::size_t cursor_ = 0;
  std::uint64_t seq_ = 0;
};

/// Pick used when a script runs out: fold when legal, else the first legal
/// primitive in canonical order.
AgentPrimitive exhaustion_choice(const LegalSet& legal);

/// Heuristic rule over a strength value; pure, so thresholds can be tested
/// without cards.
AgentPrimitive heuristic_choice(const DecisionRequest& req, double strength, const HeuristicThresholds& t);

struct HandOdds {
  double win = 0;
  double tie = 0;
  double lose = 0;
  bool exhaustive = false;
};

inline constexpr std::int64_t kExhaustiveLimit = 1'000'000;

/// Showdown odds against a uniformly random opponent hand with uniform board
/// completion. Enumerates every case when there are at most kExhaustiveLimit,
/// otherwise samples `trials` deals from rng. Throws Errc::duplicate_card and
/// Errc::wrong_card_count.
HandOdds hand_odds(const std::array<Card, 2>& hole, const std::vector<Card>& board, int trials, Rng& rng);

/// Number of (opponent hand, board completion) cases for a board of this size.
std::int64_t enumeration_size(std::size_t board_cards);

/// Win probability; see hand_odds.
double hand_strength(const std::array<Card, 2>& hole, const std::vector<Card>& board, int trials, Rng& rng);

}  // namespace holdem
