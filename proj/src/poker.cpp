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

#include "holdem/poker.hpp"

#include <algorithm>

#include "holdem/chip_split.hpp"
#include "holdem/errors.hpp"

namespace holdem {
namespace {

constexpr std::array<std::string_view, 9> kCategoryNames{
    "high_card", "pair", "two_pair", "trips", "straight", "flush", "full_house", "quads", "straight_flush"};

void require_distinct(std::span<const Card> cards) {
  std::uint64_t seen = 0;
  for (Card c : cards) {
    if (c.rank < 2 || c.rank > 14) throw Error(Errc::malformed_document, "invalid card rank");
    const std::uint64_t bit = std::uint64_t{1} << c.index();
    if (seen & bit) throw Error(Errc::duplicate_card, to_string(c) + " appears twice");
    seen |= bit;
  }
}

// Highest straight in a rank bitmask (bit r set for rank r), ace also low.
int straight_high(std::uint32_t mask) {
  if (mask & (1u << 14)) mask |= 1u << 1;
  for (int hi = 14; hi >= 5; --hi) {
    const std::uint32_t need = 0x1Fu << (hi - 4);
    if ((mask & need) == need) return hi;
  }
  return 0;
}

// Writes the top ranks of mask into out[from..N).
template <std::size_t N>
void fill_top(std::uint32_t mask, std::array<std::uint8_t, 5>& out, std::size_t from) {
  for (int r = 14; r >= 2 && from < N; --r) {
    if (mask & (1u << r)) out[from++] = static_cast<std::uint8_t>(r);
  }
}

HandRank rank_cards(std::span<const Card> cards) {
  std::array<int, 15> count{};
  std::array<int, 4> suit_count{};
  std::array<std::uint32_t, 4> suit_mask{};
  std::uint32_t mask = 0;
  for (Card c : cards) {
    ++count[c.rank];
    const auto s = static_cast<std::size_t>(c.suit);
    ++suit_count[s];
    suit_mask[s] |= 1u << c.rank;
    mask |= 1u << c.rank;
  }

  HandRank out;
  int flush_suit = -1;
  for (int s = 0; s < 4; ++s) {
    if (suit_count[s] >= 5) flush_suit = s;
  }
  if (flush_suit >= 0) {
    if (int hi = straight_high(suit_mask[flush_suit])) {
      out.category = HandCategory::straight_flush;
      out.tiebreak[0] = static_cast<std::uint8_t>(hi);
      return out;
    }
  }

  int quad = 0;
  std::vector<int> trips, pairs;
  for (int r = 14; r >= 2; --r) {
    if (count[r] == 4) quad = r;
    else if (count[r] == 3) trips.push_back(r);
    else if (count[r] == 2) pairs.push_back(r);
  }
  auto without = [&](std::initializer_list<int> ranks) {
    std::uint32_t m = mask;
    for (int r : ranks) m &= ~(1u << r);
    return m;
  };

  if (quad) {
    out.category = HandCategory::quads;
    out.tiebreak[0] = static_cast<std::uint8_t>(quad);
    fill_top<2>(without({quad}), out.tiebreak, 1);
    return out;
  }
  if (!trips.empty() && (trips.size() >= 2 || !pairs.empty())) {
    out.category = HandCategory::full_house;
    out.tiebreak[0] = static_cast<std::uint8_t>(trips[0]);
    int pair = pairs.empty() ? 0 : pairs[0];
    if (trips.size() >= 2) pair = std::max(pair, trips[1]);
    out.tiebreak[1] = static_cast<std::uint8_t>(pair);
    return out;
  }
  if (flush_suit >= 0) {
    out.category = HandCategory::flush;
    fill_top<5>(suit_mask[flush_suit], out.tiebreak, 0);
    return out;
  }
  if (int hi = straight_high(mask)) {
    out.category = HandCategory::straight;
    out.tiebreak[0] = static_cast<std::uint8_t>(hi);
    return out;
  }
  if (!trips.empty()) {
    out.category = HandCategory::trips;
    out.tiebreak[0] = static_cast<std::uint8_t>(trips[0]);
    fill_top<3>(without({trips[0]}), out.tiebreak, 1);
    return out;
  }
  if (pairs.size() >= 2) {
    out.category = HandCategory::two_pair;
    out.tiebreak[0] = static_cast<std::uint8_t>(pairs[0]);
    out.tiebreak[1] = static_cast<std::uint8_t>(pairs[1]);
    fill_top<3>(without({pairs[0], pairs[1]}), out.tiebreak, 2);
    return out;
  }
  if (pairs.size() == 1) {
    out.category = HandCategory::pair;
    out.tiebreak[0] = static_cast<std::uint8_t>(pairs[0]);
    fill_top<4>(without({pairs[0]}), out.tiebreak, 1);
    return out;
  }
  out.category = HandCategory::high_card;
  fill_top<5>(mask, out.tiebreak, 0);
  return out;
}

bool betting_live(const TableState& s) {
  return s.betting.open && s.street <= Street::river && !s.betting.folded && s.street != Street::settled;
}

void betting_options(const TableState& s, Seat seat, LegalSet& out) {
  if (!betting_live(s)) return;
  const ChipCount& inv = s.inventory(seat);
  const int mine = street_bet(s, seat);
  const int owe = to_call(s, seat);
  const int stack = inv.value();

  if (seat == Seat::robot && s.betting.robot_blind_owed > 0) {
    if (try_split(s.betting.robot_blind_owed, inv)) out.raise_targets.push_back(mine + s.betting.robot_blind_owed);
    return;
  }

  const bool other_can_respond = s.inventory(other(seat)).value() > 0;
  if (owe <= 0) {
    out.actions.push_back(AgentPrimitive::make(AgentKind::check));
  } else {
    out.actions.push_back(AgentPrimitive::make(AgentKind::fold));
    if (stack >= owe && try_split(owe, inv)) out.actions.push_back(AgentPrimitive::make(AgentKind::call));
  }
  if (stack > 0 && (other_can_respond || owe > 0)) out.actions.push_back(AgentPrimitive::make(AgentKind::all_in));
  if (other_can_respond && stack > owe) {
    const int theirs = street_bet(s, other(seat));
    for (int target = theirs + 5; target - mine <= stack; target += 5) {
      if (try_split(target - mine, inv)) out.raise_targets.push_back(target);
    }
  }
}

void move_chips(ChipCount& from, ChipCount& to, ChipCount chips) {
  from -= chips;
  to += chips;
}

void refund_uncalled(TableState& s) {
  const int excess = s.opponent_bet_zone.value() - s.robot_bet_zone.value();
  if (excess <= 0) return;
  if (auto back = try_split(excess, s.opponent_bet_zone)) move_chips(s.opponent_bet_zone, s.opponent_inventory, *back);
}

void after_action(TableState& s, Seat seat) {
  if (!betting_round_complete(s)) s.is_robot_turn = seat == Seat::opponent;
}

}  // namespace

std::string_view to_string(HandCategory c) { return kCategoryNames[static_cast<std::size_t>(c)]; }

std::string_view to_string(Showdown s) {
  switch (s) {
    case Showdown::win: return "win";
    case Showdown::lose: return "lose";
    case Showdown::tie: return "tie";
  }
  return "tie";
}

HandRank evaluate_hand(std::span<const Card> cards) {
  if (cards.size() != 7) throw Error(Errc::wrong_card_count, "expected 7 cards, got " + std::to_string(cards.size()));
  require_distinct(cards);
  return rank_cards(cards);
}

HandRank evaluate_best(std::span<const Card> cards) {
  if (cards.size() < 5 || cards.size() > 7) {
    throw Error(Errc::wrong_card_count, "expected 5 to 7 cards, got " + std::to_string(cards.size()));
  }
  require_distinct(cards);
  return rank_cards(cards);
}

Showdown judge_showdown(std::span<const Card> robot_hole, std::span<const Card> opponent_hole,
                        std::span<const Card> board) {
  if (board.size() != 5) throw Error(Errc::incomplete_board, "board has " + std::to_string(board.size()) + " cards");
  if (robot_hole.size() != 2 || opponent_hole.size() != 2) throw Error(Errc::wrong_card_count, "hole hands need 2 cards");
  std::array<Card, 9> all{};
  std::copy(robot_hole.begin(), robot_hole.end(), all.begin());
  std::copy(opponent_hole.begin(), opponent_hole.end(), all.begin() + 2);
  std::copy(board.begin(), board.end(), all.begin() + 4);
  require_distinct(all);

  std::array<Card, 7> mine{}, theirs{};
  std::copy(all.begin(), all.begin() + 2, mine.begin());
  std::copy(all.begin() + 4, all.end(), mine.begin() + 2);
  std::copy(all.begin() + 2, all.begin() + 4, theirs.begin());
  std::copy(all.begin() + 4, all.end(), theirs.begin() + 2);
  const auto a = rank_cards(mine);
  const auto b = rank_cards(theirs);
  if (a > b) return Showdown::win;
  if (a < b) return Showdown::lose;
  return Showdown::tie;
}

int street_bet(const TableState& s, Seat seat) {
  const int base = seat == Seat::robot ? s.betting.robot_street_base : s.betting.opponent_street_base;
  return s.bet_zone(seat).value() - base;
}

int to_call(const TableState& s, Seat seat) { return street_bet(s, other(seat)) - street_bet(s, seat); }

bool LegalSet::contains(const AgentPrimitive& p) const {
  if (p.kind == AgentKind::raise) {
    return std::find(raise_targets.begin(), raise_targets.end(), p.amount) != raise_targets.end();
  }
  return std::find(actions.begin(), actions.end(), p) != actions.end();
}

std::vector<AgentPrimitive> LegalSet::enumerate() const {
  std::vector<AgentPrimitive> out = actions;
  for (int a : raise_targets) out.push_back(AgentPrimitive::raise_to(a));
  return out;
}

LegalSet legal_actions(const TableState& s) {
  if (!s.is_robot_turn) throw Error(Errc::not_robot_turn, "robot action queried on the opponent's turn");
  LegalSet out;
  for (Side side : {Side::left, Side::right}) {
    const auto& h = s.hole(side);
    if (!h) continue;
    if (h->facing == Facing::in_hand) {
      out.actions.push_back(AgentPrimitive::put_down(side, Facing::down));
      out.actions.push_back(AgentPrimitive::put_down(side, Facing::up));
    } else if (h->facing == Facing::down && betting_live(s)) {
      out.actions.push_back(AgentPrimitive::view(side));
    } else if (h->facing == Facing::down && s.street == Street::showdown) {
      out.actions.push_back(AgentPrimitive::show(side));
    }
  }
  betting_options(s, Seat::robot, out);
  if (s.street == Street::settled && s.betting.result &&
      (*s.betting.result == HandResult::win || *s.betting.result == HandResult::opponent_folded) &&
      pot_value(s) > 0) {
    out.actions.push_back(AgentPrimitive::make(AgentKind::collect_winnings));
  }
  return out;
}

LegalSet legal_opponent_actions(const TableState& s) {
  LegalSet out;
  if (s.is_robot_turn) return out;
  betting_options(s, Seat::opponent, out);
  return out;
}

bool betting_round_complete(const TableState& s) {
  if (s.betting.folded) return true;
  if (!betting_live(s) || s.betting.robot_blind_owed > 0) return false;
  const int r = street_bet(s, Seat::robot);
  const int o = street_bet(s, Seat::opponent);
  const bool robot_broke = s.robot_inventory.value() == 0;
  const bool opponent_broke = s.opponent_inventory.value() == 0;
  if (r == o) return (s.betting.robot_acted && s.betting.opponent_acted) || robot_broke || opponent_broke;
  return r < o ? robot_broke : opponent_broke;
}

TableState advance_street(TableState s) {
  if (s.street >= Street::showdown) throw Error(Errc::already_settled, "no street left to deal");
  if (!betting_round_complete(s) || s.betting.folded) throw Error(Errc::betting_round_open, "betting round still open");
  if (s.street == Street::river) {
    s.street = Street::showdown;
    s.betting.open = false;
    for (auto& h : s.opponent_hole) {
      if (h) h->facing = Facing::up;
    }
    s.is_robot_turn = true;
    return s;
  }
  const std::size_t n = s.street == Street::preflop ? 3 : 1;
  if (s.deck.size() < n) throw Error(Errc::deck_exhausted, "deck cannot deal the next street");
  for (std::size_t i = 0; i < n; ++i) {
    s.community.push_back(s.deck.back());
    s.deck.pop_back();
  }
  s.street = static_cast<Street>(static_cast<int>(s.street) + 1);
  s.betting.robot_street_base = s.robot_bet_zone.value();
  s.betting.opponent_street_base = s.opponent_bet_zone.value();
  s.betting.robot_acted = false;
  s.betting.opponent_acted = false;
  s.is_robot_turn = other(s.betting.preflop_leader) == Seat::robot;
  return s;
}

TableState settle_pot(TableState s, HandResult result) {
  if (s.street == Street::settled) throw Error(Errc::already_settled, "pot already settled");
  if (s.street != Street::showdown && !s.betting.folded) throw Error(Errc::betting_round_open, "hand not finished");
  switch (result) {
    case HandResult::win:
    case HandResult::opponent_folded:
      refund_uncalled(s);
      break;
    case HandResult::lose:
      move_chips(s.robot_bet_zone, s.opponent_inventory, s.robot_bet_zone);
      move_chips(s.opponent_bet_zone, s.opponent_inventory, s.opponent_bet_zone);
      break;
    case HandResult::tie:
      move_chips(s.robot_bet_zone, s.robot_inventory, s.robot_bet_zone);
      move_chips(s.opponent_bet_zone, s.opponent_inventory, s.opponent_bet_zone);
      break;
  }
  s.street = Street::settled;
  s.betting.open = false;
  s.betting.result = result;
  s.is_robot_turn = (result == HandResult::win || result == HandResult::opponent_folded) && pot_value(s) > 0;
  return s;
}

TableState commit_robot_action(TableState s, const AgentPrimitive& p) {
  if (!s.is_robot_turn) throw Error(Errc::not_robot_turn, "robot action committed on the opponent's turn");
  switch (p.kind) {
    case AgentKind::check:
    case AgentKind::call:
    case AgentKind::raise:
    case AgentKind::all_in:
    case AgentKind::fold:
      break;
    default:
      return s;
  }
  if (!betting_live(s)) throw Error(Errc::illegal_primitive, to_string(p) + " outside a betting round");

  if (s.betting.robot_blind_owed > 0) {
    if (p.kind != AgentKind::raise) throw Error(Errc::illegal_primitive, "blind must be posted first");
    s.betting.robot_blind_owed = 0;
    // Posting is not a betting action; the small blind keeps the turn.
    s.is_robot_turn = s.betting.preflop_leader == Seat::robot;
    return s;
  }
  if (p.kind == AgentKind::check && to_call(s, Seat::robot) > 0) {
    throw Error(Errc::illegal_primitive, "check while facing a bet");
  }
  if (p.kind == AgentKind::fold) {
    s.betting.folded = Seat::robot;
    return s;
  }
  s.betting.robot_acted = true;
  if (street_bet(s, Seat::robot) > street_bet(s, Seat::opponent)) s.betting.opponent_acted = false;
  after_action(s, Seat::robot);
  return s;
}

TableState apply_opponent_action(TableState s, const AgentPrimitive& p) {
  if (s.is_robot_turn || !betting_live(s)) throw Error(Errc::out_of_turn, "opponent cannot act now");
  if (!legal_opponent_actions(s).contains(p)) throw Error(Errc::illegal_primitive, to_string(p) + " is not legal");
  ChipCount moved;
  switch (p.kind) {
    case AgentKind::fold:
      s.betting.folded = Seat::opponent;
      return s;
    case AgentKind::check:
      break;
    case AgentKind::call:
      moved = *try_split(to_call(s, Seat::opponent), s.opponent_inventory);
      break;
    case AgentKind::raise:
      moved = *try_split(p.amount - street_bet(s, Seat::opponent), s.opponent_inventory);
      break;
    case AgentKind::all_in:
      moved = s.opponent_inventory;
      break;
    default:
      throw Error(Errc::illegal_primitive, to_string(p) + " is not an opponent action");
  }
  move_chips(s.opponent_inventory, s.opponent_bet_zone, moved);
  s.betting.opponent_acted = true;
  if (street_bet(s, Seat::opponent) > street_bet(s, Seat::robot)) s.betting.robot_acted = false;
  after_action(s, Seat::opponent);
  return s;
}

TableState progress(TableState s) {
  for (;;) {
    if (s.street == Street::settled) return s;
    if (s.betting.folded) {
      const HandResult r = *s.betting.folded == Seat::robot ? HandResult::lose : HandResult::opponent_folded;
      return settle_pot(std::move(s), r);
    }
    if (s.street <= Street::river && betting_round_complete(s)) {
      s = advance_street(std::move(s));
      continue;
    }
    if (s.street == Street::showdown) {
      for (auto& h : s.opponent_hole) {
        if (h) h->facing = Facing::up;
      }
      s.is_robot_turn = true;
      const bool shown = s.hole_left && s.hole_left->facing == Facing::up && s.hole_right &&
                         s.hole_right->facing == Facing::up;
      if (shown && s.opponent_hole[0] && s.opponent_hole[1]) {
        const std::array<Card, 2> mine{s.hole_left->card, s.hole_right->card};
        const std::array<Card, 2> theirs{s.opponent_hole[0]->card, s.opponent_hole[1]->card};
        const Showdown r = judge_showdown(mine, theirs, s.community);
        const HandResult hr = r == Showdown::win ? HandResult::win : r == Showdown::lose ? HandResult::lose : HandResult::tie;
        return settle_pot(std::move(s), hr);
      }
    }
    return s;
  }
}

int pot_value(const TableState& s) { return s.robot_bet_zone.value() + s.opponent_bet_zone.value(); }

}  // namespace holdem
