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

#include "holdem/tabletop.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "holdem/chip_split.hpp"
#include "holdem/errors.hpp"
#include "holdem/rng.hpp"

namespace holdem {
namespace {

constexpr std::string_view kRanks = "23456789TJQKA";
constexpr std::string_view kSuits = "cdhs";

template <typename E, std::size_t N>
E parse_enum(std::string_view text, const std::array<std::string_view, N>& names, std::string_view what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == text) return static_cast<E>(i);
  }
  throw Error(Errc::malformed_document, "unknown " + std::string(what) + " '" + std::string(text) + "'");
}

constexpr std::array<std::string_view, 3> kFacingNames{"up", "down", "in_hand"};
constexpr std::array<std::string_view, 2> kSeatNames{"robot", "opponent"};
constexpr std::array<std::string_view, 2> kBlindNames{"small_blind", "big_blind"};
constexpr std::array<std::string_view, 6> kStreetNames{"preflop", "flop", "turn", "river", "showdown", "settled"};
constexpr std::array<std::string_view, 7> kStageNames{"acting", "atom_idle", "idle", "win",
                                                      "lose",   "to_recover", "down"};
constexpr std::array<std::string_view, 4> kLevelNames{"SP", "DC", "TF", "DF"};
constexpr std::array<std::string_view, 4> kResultNames{"win", "lose", "tie", "opponent_folded"};

std::size_t expected_board(Street s) {
  switch (s) {
    case Street::preflop: return 0;
    case Street::flop: return 3;
    case Street::turn: return 4;
    default: return 5;
  }
}

}  // namespace

std::string to_string(Card c) {
  std::string out;
  out += kRanks[c.rank - 2];
  out += kSuits[static_cast<int>(c.suit)];
  return out;
}

Card parse_card(std::string_view text) {
  auto bad = [&] { return Error(Errc::malformed_document, "bad card '" + std::string(text) + "'"); };
  std::string norm(text);
  if (norm.size() == 3 && norm[0] == '1' && norm[1] == '0') norm = "T" + norm.substr(2);
  if (norm.size() != 2) throw bad();
  const auto r = kRanks.find(static_cast<char>(std::toupper(static_cast<unsigned char>(norm[0]))));
  const auto s = kSuits.find(static_cast<char>(std::tolower(static_cast<unsigned char>(norm[1]))));
  if (r == std::string_view::npos || s == std::string_view::npos) throw bad();
  return Card{static_cast<std::uint8_t>(r + 2), static_cast<Suit>(s)};
}

std::vector<Card> full_deck() {
  std::vector<Card> deck;
  deck.reserve(52);
  for (int i = 0; i < 52; ++i) deck.push_back(Card::from_index(i));
  return deck;
}

std::optional<Denomination> denomination_from_value(int value) {
  for (auto d : kAscending) {
    if (value_of(d) == value) return d;
  }
  return std::nullopt;
}

int ChipCount::value() const {
  int v = 0;
  for (auto d : kAscending) v += value_of(d) * (*this)[d];
  return v;
}

int ChipCount::chips() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

ChipCount& ChipCount::operator+=(const ChipCount& o) {
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
  return *this;
}

ChipCount& ChipCount::operator-=(const ChipCount& o) {
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= o.counts_[i];
  return *this;
}

int chip_value(const ChipCount& c) { return c.value(); }

std::string_view to_string(Facing f) { return kFacingNames[static_cast<std::size_t>(f)]; }
std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }
std::string_view side_letter(Side s) { return s == Side::left ? "L" : "R"; }
std::string_view to_string(Seat s) { return kSeatNames[static_cast<std::size_t>(s)]; }
std::string_view to_string(Blind b) { return kBlindNames[static_cast<std::size_t>(b)]; }
std::string_view to_string(Street s) { return kStreetNames[static_cast<std::size_t>(s)]; }
std::string_view to_string(LoopStage s) { return kStageNames[static_cast<std::size_t>(s)]; }
std::string_view to_string(OutcomeLevel l) { return kLevelNames[static_cast<std::size_t>(l)]; }
std::string_view to_string(HandResult r) { return kResultNames[static_cast<std::size_t>(r)]; }

Facing parse_facing(std::string_view t) { return parse_enum<Facing>(t, kFacingNames, "facing"); }
Blind parse_blind(std::string_view t) { return parse_enum<Blind>(t, kBlindNames, "blind"); }
Street parse_street(std::string_view t) { return parse_enum<Street>(t, kStreetNames, "street"); }
LoopStage parse_loop_stage(std::string_view t) { return parse_enum<LoopStage>(t, kStageNames, "loop stage"); }
OutcomeLevel parse_outcome_level(std::string_view t) { return parse_enum<OutcomeLevel>(t, kLevelNames, "outcome level"); }
HandResult parse_hand_result(std::string_view t) { return parse_enum<HandResult>(t, kResultNames, "hand result"); }
Seat parse_seat(std::string_view t) { return parse_enum<Seat>(t, kSeatNames, "seat"); }

ChipCount TableState::chip_totals() const {
  return robot_inventory + opponent_inventory + robot_bet_zone + opponent_bet_zone;
}

TableState new_initial_table(const TableConfig& config) {
  TableState s;
  s.deck = full_deck();
  // Fisher-Yates on the raw stream; std::shuffle is not portable across libraries.
  Rng rng(config.deck_seed, 0x6465636bULL);
  for (std::size_t i = s.deck.size() - 1; i > 0; --i) {
    std::swap(s.deck[i], s.deck[rng.below(i + 1)]);
  }
  auto draw = [&] {
    Card c = s.deck.back();
    s.deck.pop_back();
    return c;
  };
  s.hole_left = HoleCard{draw(), Facing::down};
  s.opponent_hole[0] = HoleCard{draw(), Facing::down};
  s.hole_right = HoleCard{draw(), Facing::down};
  s.opponent_hole[1] = HoleCard{draw(), Facing::down};
  s.robot_inventory = config.robot_chips;
  s.opponent_inventory = config.opponent_chips;
  s.blind = config.robot_blind;
  s.street = Street::preflop;
  s.scene_stable = true;
  s.betting.open = true;
  s.betting.forced_blinds = config.forced_blinds;
  s.betting.preflop_leader = config.preflop_leader;
  if (config.forced_blinds) {
    // Small blind leads preflop. The opponent posts at once; the robot owes
    // its blind as its first chip action.
    const Seat small = config.robot_blind == Blind::small_blind ? Seat::robot : Seat::opponent;
    s.betting.preflop_leader = small;
    const int opponent_blind = small == Seat::opponent ? kSmallBlind : kBigBlind;
    if (auto post = try_split(opponent_blind, s.opponent_inventory)) {
      s.opponent_inventory -= *post;
      s.opponent_bet_zone += *post;
    }
    s.betting.robot_blind_owed = small == Seat::robot ? kSmallBlind : kBigBlind;
    s.is_robot_turn = true;
  } else {
    s.is_robot_turn = config.preflop_leader == Seat::robot;
  }
  return s;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::card_duplicated: return "CardDuplicated";
    case ViolationKind::chip_conservation_broken: return "ChipConservationBroken";
    case ViolationKind::negative_chip_count: return "NegativeChipCount";
    case ViolationKind::community_length_invalid: return "CommunityLengthInvalid";
    case ViolationKind::flag_inconsistent: return "FlagInconsistent";
  }
  return "Unknown";
}

std::vector<Violation> validate_state(const TableState& s, const ChipCount& expected_totals) {
  std::vector<Violation> out;

  std::array<int, 52> seen{};
  auto note = [&](Card c, std::string_view where) {
    if (c.rank < 2 || c.rank > 14) {
      out.push_back({ViolationKind::flag_inconsistent, std::nullopt, "invalid card in " + std::string(where)});
      return;
    }
    if (++seen[c.index()] == 2) {
      out.push_back({ViolationKind::card_duplicated, std::nullopt, to_string(c) + " in " + std::string(where)});
    }
  };
  for (Card c : s.deck) note(c, "deck");
  if (s.hole_left) note(s.hole_left->card, "hole_left");
  if (s.hole_right) note(s.hole_right->card, "hole_right");
  for (const auto& h : s.opponent_hole) {
    if (h) note(h->card, "opponent_hole");
  }
  for (Card c : s.community) note(c, "community");

  const ChipCount totals = s.chip_totals();
  for (auto d : kAscending) {
    for (const ChipCount* zone : {&s.robot_inventory, &s.opponent_inventory, &s.robot_bet_zone, &s.opponent_bet_zone}) {
      if ((*zone)[d] < 0) {
        out.push_back({ViolationKind::negative_chip_count, d, "negative count"});
        break;
      }
    }
    if (totals[d] != expected_totals[d]) {
      out.push_back({ViolationKind::chip_conservation_broken, d,
                     std::to_string(totals[d]) + " != " + std::to_string(expected_totals[d])});
    }
  }

  const auto n = s.community.size();
  if (n != 0 && n != 3 && n != 4 && n != 5) {
    out.push_back({ViolationKind::community_length_invalid, std::nullopt, std::to_string(n) + " cards"});
  } else if (s.street <= Street::river && n != expected_board(s.street)) {
    out.push_back({ViolationKind::flag_inconsistent, std::nullopt, "board does not match street"});
  } else if (s.street == Street::showdown && n != 5) {
    out.push_back({ViolationKind::flag_inconsistent, std::nullopt, "showdown without a full board"});
  }

  const int in_hand = (s.hole_left && s.hole_left->facing == Facing::in_hand) +
                      (s.hole_right && s.hole_right->facing == Facing::in_hand);
  if (in_hand > 1) out.push_back({ViolationKind::flag_inconsistent, std::nullopt, "two cards in hand"});
  for (const auto& h : s.opponent_hole) {
    if (h && h->facing == Facing::in_hand) {
      out.push_back({ViolationKind::flag_inconsistent, std::nullopt, "opponent card in robot hand"});
    }
  }
  if (s.street == Street::settled && s.betting.open) {
    out.push_back({ViolationKind::flag_inconsistent, std::nullopt, "settled hand with open betting"});
  }
  return out;
}

}  // namespace holdem
