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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holdem {

enum class Suit : std::uint8_t { clubs, diamonds, hearts, spades };

struct Card {
  std::uint8_t rank = 2;  // 2..14, ace high
  Suit suit = Suit::clubs;

  constexpr int index() const { return (rank - 2) * 4 + static_cast<int>(suit); }
  static constexpr Card from_index(int i) {
    return Card{static_cast<std::uint8_t>(i / 4 + 2), static_cast<Suit>(i % 4)};
  }

  friend constexpr auto operator<=>(const Card&, const Card&) = default;
};

/// "As", "Td", "2c". parse_card also accepts "10d" and upper-case suits.
std::string to_string(Card c);
Card parse_card(std::string_view text);

/// The 52 cards in index order.
std::vector<Card> full_deck();

enum class Denomination : int { five = 5, ten = 10, fifty = 50, hundred = 100 };

inline constexpr std::array<Denomination, 4> kAscending{Denomination::five, Denomination::ten,
                                                        Denomination::fifty, Denomination::hundred};
inline constexpr std::array<Denomination, 4> kDescending{Denomination::hundred, Denomination::fifty,
                                                         Denomination::ten, Denomination::five};

constexpr int value_of(Denomination d) { return static_cast<int>(d); }
std::optional<Denomination> denomination_from_value(int value);

/// Per-denomination chip counts. All four denominations are always present.
class ChipCount {
 public:
  constexpr ChipCount() = default;
  constexpr ChipCount(int n5, int n10, int n50, int n100) : counts_{n5, n10, n50, n100} {}

  int operator[](Denomination d) const { return counts_[slot(d)]; }
  int& operator[](Denomination d) { return counts_[slot(d)]; }

  int value() const;
  int chips() const;
  bool empty() const { return chips() == 0; }

  ChipCount& operator+=(const ChipCount& o);
  ChipCount& operator-=(const ChipCount& o);
  friend ChipCount operator+(ChipCount a, const ChipCount& b) { return a += b; }
  friend ChipCount operator-(ChipCount a, const ChipCount& b) { return a -= b; }
  friend bool operator==(const ChipCount&, const ChipCount&) = default;

 private:
  static constexpr std::size_t slot(Denomination d) {
    switch (d) {
      case Denomination::five: return 0;
      case Denomination::ten: return 1;
      case Denomination::fifty: return 2;
      case Denomination::hundred: return 3;
    }
    return 0;
  }
  std::array<int, 4> counts_{};
};

int chip_value(const ChipCount& c);

enum class Facing { up, down, in_hand };
enum class Side { left, right };
enum class Seat { robot, opponent };
enum class Blind { small_blind, big_blind };
enum class Street { preflop, flop, turn, river, showdown, settled };
enum class LoopStage { acting, atom_idle, idle, win, lose, to_recover, down };
enum class OutcomeLevel { SP, DC, TF, DF };
enum class HandResult { win, lose, tie, opponent_folded };

inline constexpr std::array<LoopStage, 7> kLoopStages{LoopStage::acting, LoopStage::atom_idle,
                                                      LoopStage::idle,   LoopStage::win,
                                                      LoopStage::lose,   LoopStage::to_recover,
                                                      LoopStage::down};
inline constexpr std::array<OutcomeLevel, 4> kOutcomeLevels{OutcomeLevel::SP, OutcomeLevel::DC,
                                                            OutcomeLevel::TF, OutcomeLevel::DF};

constexpr bool is_completion(OutcomeLevel l) { return l == OutcomeLevel::SP || l == OutcomeLevel::DC; }
constexpr Seat other(Seat s) { return s == Seat::robot ? Seat::opponent : Seat::robot; }

std::string_view to_string(Facing f);
std::string_view to_string(Side s);
std::string_view side_letter(Side s);
std::string_view to_string(Seat s);
std::string_view to_string(Blind b);
std::string_view to_string(Street s);
std::string_view to_string(LoopStage s);
std::string_view to_string(OutcomeLevel l);
std::string_view to_string(HandResult r);

Facing parse_facing(std::string_view);
Blind parse_blind(std::string_view);
Street parse_street(std::string_view);
LoopStage parse_loop_stage(std::string_view);
OutcomeLevel parse_outcome_level(std::string_view);
HandResult parse_hand_result(std::string_view);
Seat parse_seat(std::string_view);

struct HoleCard {
  Card card;
  Facing facing = Facing::down;
  friend bool operator==(const HoleCard&, const HoleCard&) = default;
};

/// Betting bookkeeping for the current hand. Bet zones hold every chip
/// committed during the hand; a seat's current-street bet is its zone value
/// minus the base recorded when the street opened.
struct BettingState {
  bool open = false;
  bool forced_blinds = false;
  int robot_blind_owed = 0;
  int robot_street_base = 0;
  int opponent_street_base = 0;
  bool robot_acted = false;
  bool opponent_acted = false;
  Seat preflop_leader = Seat::robot;  // the other seat leads every later street
  std::optional<Seat> folded;
  std::optional<HandResult> result;

  friend bool operator==(const BettingState&, const BettingState&) = default;
};

struct TableState {
  std::vector<Card> deck;
  std::optional<HoleCard> hole_left;
  std::optional<HoleCard> hole_right;
  std::array<std::optional<HoleCard>, 2> opponent_hole;
  std::vector<Card> community;
  ChipCount robot_inventory;
  ChipCount opponent_inventory;
  ChipCount robot_bet_zone;
  ChipCount opponent_bet_zone;
  Blind blind = Blind::big_blind;  // the robot's blind
  bool is_robot_turn = true;
  bool scene_stable = true;
  Street street = Street::preflop;
  BettingState betting;

  std::optional<HoleCard>& hole(Side s) { return s == Side::left ? hole_left : hole_right; }
  const std::optional<HoleCard>& hole(Side s) const { return s == Side::left ? hole_left : hole_right; }

  ChipCount& inventory(Seat s) { return s == Seat::robot ? robot_inventory : opponent_inventory; }
  const ChipCount& inventory(Seat s) const { return s == Seat::robot ? robot_inventory : opponent_inventory; }
  ChipCount& bet_zone(Seat s) { return s == Seat::robot ? robot_bet_zone : opponent_bet_zone; }
  const ChipCount& bet_zone(Seat s) const { return s == Seat::robot ? robot_bet_zone : opponent_bet_zone; }

  /// Sum of the four chip zones.
  ChipCount chip_totals() const;

  friend bool operator==(const TableState&, const TableState&) = default;
};

struct TableConfig {
  ChipCount robot_chips{4, 3, 3, 3};
  ChipCount opponent_chips{4, 4, 3, 3};
  Blind robot_blind = Blind::big_blind;
  std::uint64_t deck_seed = 0;
  // Seat that opens preflop betting; the other seat opens every later street.
  // Ignored under forced blinds, where the small blind opens preflop.
  Seat preflop_leader = Seat::robot;
  bool forced_blinds = false;

  friend bool operator==(const TableConfig&, const TableConfig&) = default;
};

/// Fresh hand: seeded deck, both robot hole cards face-down in their slots,
/// opponent hole dealt, empty board and bet zones, preflop betting open.
TableState new_initial_table(const TableConfig& config);

enum class ViolationKind {
  card_duplicated,
  chip_conservation_broken,
  negative_chip_count,
  community_length_invalid,
  flag_inconsistent,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::optional<Denomination> denomination;
  std::string detail;
};

/// Empty iff every tabletop invariant holds against the configured chip totals.
std::vector<Violation> validate_state(const TableState& s, const ChipCount& expected_totals);

}  // namespace holdem
