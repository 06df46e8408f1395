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

#include <set>

#include "holdem/codec.hpp"
#include "holdem/errors.hpp"
#include "holdem/rng.hpp"
#include "holdem/tabletop.hpp"

using namespace holdem;

TEST(Card, ParsesAndPrints) {
  EXPECT_EQ(to_string(parse_card("As")), "As");
  EXPECT_EQ(to_string(parse_card("10d")), "Td");
  EXPECT_EQ(to_string(parse_card("2C")), "2c");
  EXPECT_THROW(parse_card("1x"), Error);
  EXPECT_THROW(parse_card(""), Error);
}

TEST(Card, IndexRoundTripsOverDeck) {
  const auto deck = full_deck();
  ASSERT_EQ(deck.size(), 52u);
  std::set<int> seen;
  for (const Card& c : deck) {
    EXPECT_EQ(Card::from_index(c.index()), c);
    EXPECT_EQ(parse_card(to_string(c)), c);
    seen.insert(c.index());
  }
  EXPECT_EQ(seen.size(), 52u);
}

TEST(ChipCount, ValueAndArithmetic) {
  const ChipCount a{4, 3, 3, 3};
  EXPECT_EQ(a.value(), 4 * 5 + 3 * 10 + 3 * 50 + 3 * 100);
  EXPECT_EQ(a.chips(), 13);
  EXPECT_EQ((a - a).value(), 0);
  EXPECT_TRUE((a - a).empty());
  EXPECT_EQ((a + ChipCount{1, 0, 0, 0}), (ChipCount{5, 3, 3, 3}));
}

TEST(Table, FreshTableHoldsInvariants) {
  TableConfig cfg;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    cfg.deck_seed = seed;
    const TableState t = new_initial_table(cfg);
    EXPECT_TRUE(validate_state(t, cfg.robot_chips + cfg.opponent_chips).empty());
    ASSERT_TRUE(t.hole_left && t.hole_right);
    EXPECT_EQ(t.hole_left->facing, Facing::down);
    EXPECT_TRUE(t.community.empty());
    EXPECT_TRUE(t.robot_bet_zone.empty());
    EXPECT_EQ(t.deck.size(), 48u);
  }
}

TEST(Table, SameSeedSameDeal) {
  TableConfig cfg;
  cfg.deck_seed = 99;
  EXPECT_EQ(new_initial_table(cfg), new_initial_table(cfg));
  TableConfig other = cfg;
  other.deck_seed = 100;
  EXPECT_NE(new_initial_table(cfg).deck, new_initial_table(other).deck);
}

TEST(Table, ValidateFlagsBrokenStates) {
  TableConfig cfg;
  const ChipCount totals = cfg.robot_chips + cfg.opponent_chips;
  TableState t = new_initial_table(cfg);

  TableState dup = t;
  dup.community = {dup.hole_left->card, dup.deck[0], dup.deck[1]};
  dup.deck.erase(dup.deck.begin(), dup.deck.begin() + 2);
  bool found = false;
  for (const auto& v : validate_state(dup, totals)) found = found || v.kind == ViolationKind::card_duplicated;
  EXPECT_TRUE(found);

  TableState lost = t;
  lost.robot_inventory[Denomination::fifty] -= 1;
  found = false;
  for (const auto& v : validate_state(lost, totals)) {
    if (v.kind == ViolationKind::chip_conservation_broken) {
      found = true;
      EXPECT_EQ(v.denomination, Denomination::fifty);
    }
  }
  EXPECT_TRUE(found);

  TableState two = t;
  two.community = {two.deck[0], two.deck[1]};
  two.deck.erase(two.deck.begin(), two.deck.begin() + 2);
  found = false;
  for (const auto& v : validate_state(two, totals)) found = found || v.kind == ViolationKind::community_length_invalid;
  EXPECT_TRUE(found);
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  Rng a(5, 1), b(5, 1), c(5, 2);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    (void)c;
  }
  Rng d(5, 1), e(5, 2);
  int equal = 0;
  for (int i = 0; i < 100; ++i) equal += d.next() == e.next();
  EXPECT_LT(equal, 2);
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(7), 7u);
    const double u = r.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
}

TEST(Codec, TableRoundTripsThroughCanonicalText) {
  TableConfig cfg;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.deck_seed = seed;
    cfg.robot_blind = seed % 2 ? Blind::small_blind : Blind::big_blind;
    TableState t = new_initial_table(cfg);
    t.community = {t.deck[0], t.deck[1], t.deck[2]};
    t.deck.erase(t.deck.begin(), t.deck.begin() + 3);
    t.hole_right->facing = Facing::in_hand;
    t.betting.result = HandResult::tie;
    const std::string text = dump(encode(t));
    const TableState back = decode_table(parse_json(text));
    EXPECT_EQ(back, t);
    EXPECT_EQ(dump(encode(back)), text);
  }
}

TEST(Codec, ConfigRoundTrips) {
  TableConfig cfg;
  cfg.deck_seed = 17;
  cfg.forced_blinds = true;
  cfg.robot_blind = Blind::small_blind;
  EXPECT_EQ(decode_table_config(parse_json(dump(encode(cfg)))), cfg);
}

TEST(Codec, RejectsMalformedText) {
  EXPECT_THROW(parse_json("{"), Error);
  EXPECT_THROW(decode_chips(parse_json(R"({"5":1})")), Error);
  EXPECT_THROW(decode_card(parse_json(R"("Zz")")), Error);
}
