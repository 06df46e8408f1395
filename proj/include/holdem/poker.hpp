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
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "holdem/primitives.hpp"
#include "holdem/tabletop.hpp"

namespace holdem {

enum class HandCategory : std::uint8_t {
  high_card,
  pair,
  two_pair,
  trips,
  straight,
  flush,
  full_house,
  quads,
  straight_flush,
};

std::string_view to_string(HandCategory c);

/// Category then up to five tiebreak ranks, most significant first, zero padded.
struct HandRank {
  HandCategory category = HandCategory::high_card;
  std::array<std::uint8_t, 5> tiebreak{};

  friend constexpr auto operator<=>(const HandRank&, const HandRank&) = default;
};

/// Best five-card rank among exactly seven distinct cards.
HandRank evaluate_hand(std::span<const Card> cards);

/// Best rank among five to seven distinct cards.
HandRank evaluate_best(std::span<const Card> cards);

enum class Showdown { win, lose, tie };

std::string_view to_string(Showdown s);

/// Robot's result against the opponent on a complete board.
Showdown judge_showdown(std::span<const Card> robot_hole, std::span<const Card> opponent_hole,
                        std::span<const Card> board);

// Betting arithmetic. A seat's street bet is its bet-zone value minus the
// base recorded when the street opened.
int street_bet(const TableState& s, Seat seat);
int to_call(const TableState& s, Seat seat);

/// Legal agent primitives at one state. Raise targets are kept apart so the
/// set stays small; enumerate() expands them.
struct LegalSet {
  std::vector<AgentPrimitive> actions;
  std::vector<int> raise_targets;

  bool contains(const AgentPrimitive& p) const;
  bool empty() const { return actions.empty() && raise_targets.empty(); }
  std::vector<AgentPrimitive> enumerate() const;

  friend bool operator==(const LegalSet&, const LegalSet&) = default;
};

/// Robot primitives legal now. Throws Errc::not_robot_turn off turn.
LegalSet legal_actions(const TableState& s);

/// Betting primitives available to the opponent seat (empty off turn).
LegalSet legal_opponent_actions(const TableState& s);

bool betting_round_complete(const TableState& s);

/// Deals the next street (3/1/1 cards) or moves river to showdown.
/// Throws Errc::betting_round_open or Errc::deck_exhausted.
TableState advance_street(TableState s);

/// Throws Errc::already_settled, or Errc::betting_round_open before a
/// showdown or fold.
TableState settle_pot(TableState s, HandResult result);

/// Records a completed robot action whose chips (if any) are already in the
/// bet zone. Throws Errc::not_robot_turn or Errc::illegal_primitive.
TableState commit_robot_action(TableState s, const AgentPrimitive& p);

/// Applies an opponent action with instant chip motion.
/// Throws Errc::out_of_turn or Errc::illegal_primitive.
TableState apply_opponent_action(TableState s, const AgentPrimitive& p);

/// Runs the table forward after any action: settles folds, deals streets
/// when a round closes (running the board out when a seat is all in),
/// reveals the opponent at showdown and settles once the robot has shown
/// both cards.
TableState progress(TableState s);

/// Value of every chip in both bet zones.
int pot_value(const TableState& s);

}  // namespace holdem
