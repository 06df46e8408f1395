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

#include "holdem/parsed_state.hpp"

#include <algorithm>
#include <set>

#include "holdem/errors.hpp"

namespace holdem {
namespace {

constexpr std::array<std::string_view, 8> kFieldNames{"LS", "TO", "BI", "CC", "CB", "RCI", "OCI", "SO"};
constexpr std::array<std::string_view, 8> kSchemaNames{"loop_stage",      "is_my_turn",    "blind",
                                                       "community_cards", "current_bets",  "my_chips",
                                                       "opponent_chips",  "showdown_outcome"};

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::schema_invalid, what); }

void exact_keys(const Json& obj, std::initializer_list<std::string_view> keys, std::string_view where) {
  if (!obj.is_object()) invalid(std::string(where) + " must be an object");
  if (obj.size() != keys.size()) invalid(std::string(where) + " has unexpected fields");
  for (auto k : keys) {
    if (!obj.contains(std::string(k))) invalid(std::string(where) + " lacks '" + std::string(k) + "'");
  }
}

template <typename T, typename Parse>
T label(const Json& v, std::string_view key, Parse parse) {
  if (!v.is_string()) invalid(std::string(key) + " must be a string");
  try {
    return parse(v.get<std::string>());
  } catch (const Error&) {
    invalid(std::string(key) + " has an out-of-domain value");
  }
}

bool flag(const Json& v, std::string_view key) {
  if (!v.is_boolean()) invalid(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

ChipCount chips(const Json& v, std::string_view key) {
  try {
    return decode_chips(v);
  } catch (const Error& e) {
    invalid(std::string(key) + ": " + e.what());
  }
}

void check_board(const std::vector<Card>& cards) {
  const auto n = cards.size();
  if (n != 0 && n != 3 && n != 4 && n != 5) invalid("community_cards must hold 0, 3, 4 or 5 cards");
  std::set<int> seen;
  for (Card c : cards) {
    if (!seen.insert(c.index()).second) invalid("community_cards repeats " + to_string(c));
  }
}

}  // namespace

std::string_view to_string(ShowdownOutcome o) {
  switch (o) {
    case ShowdownOutcome::win: return "win";
    case ShowdownOutcome::lose: return "lose";
    case ShowdownOutcome::not_showdown: return "not_showdown";
  }
  return "not_showdown";
}

ShowdownOutcome parse_showdown_outcome(std::string_view text) {
  if (text == "win") return ShowdownOutcome::win;
  if (text == "lose") return ShowdownOutcome::lose;
  if (text == "not_showdown") return ShowdownOutcome::not_showdown;
  throw Error(Errc::malformed_document, "unknown showdown outcome '" + std::string(text) + "'");
}

std::string_view to_string(Field f) { return kFieldNames[static_cast<std::size_t>(f)]; }
std::string_view schema_name(Field f) { return kSchemaNames[static_cast<std::size_t>(f)]; }

std::optional<Field> parse_field(std::string_view text) {
  for (std::size_t i = 0; i < kFieldNames.size(); ++i) {
    if (kFieldNames[i] == text) return static_cast<Field>(i);
  }
  return std::nullopt;
}

Json encode(const ParsedState& ps) {
  Json t;
  t["scene_stable"] = ps.table.scene_stable;
  t["is_my_turn"] = ps.table.is_my_turn;
  t["community_cards"] = encode(ps.table.community_cards);
  t["my_chips"] = encode(ps.table.my_chips);
  t["opponent_chips"] = encode(ps.table.opponent_chips);
  t["my_current_bet"] = encode(ps.table.my_current_bet);
  t["opponent_bet"] = encode(ps.table.opponent_bet);
  t["uncertain_fields"] = ps.table.uncertain_fields;
  Json j;
  j["loop_stage"] = std::string(to_string(ps.loop_stage));
  j["blind"] = std::string(to_string(ps.blind));
  j["showdown_outcome"] = std::string(to_string(ps.showdown_outcome));
  j["table"] = t;
  return j;
}

ParsedState decode_parsed_state(const Json& j) {
  exact_keys(j, {"loop_stage", "blind", "showdown_outcome", "table"}, "document");
  ParsedState ps;
  ps.loop_stage = label<LoopStage>(j["loop_stage"], "loop_stage", parse_loop_stage);
  ps.blind = label<Blind>(j["blind"], "blind", parse_blind);
  ps.showdown_outcome = label<ShowdownOutcome>(j["showdown_outcome"], "showdown_outcome", parse_showdown_outcome);
  const Json& t = j["table"];
  exact_keys(t,
             {"scene_stable", "is_my_turn", "community_cards", "my_chips", "opponent_chips", "my_current_bet",
              "opponent_bet", "uncertain_fields"},
             "table");
  ps.table.scene_stable = flag(t["scene_stable"], "scene_stable");
  ps.table.is_my_turn = flag(t["is_my_turn"], "is_my_turn");
  try {
    ps.table.community_cards = decode_cards(t["community_cards"]);
  } catch (const Error& e) {
    invalid(std::string("community_cards: ") + e.what());
  }
  check_board(ps.table.community_cards);
  ps.table.my_chips = chips(t["my_chips"], "my_chips");
  ps.table.opponent_chips = chips(t["opponent_chips"], "opponent_chips");
  ps.table.my_current_bet = chips(t["my_current_bet"], "my_current_bet");
  ps.table.opponent_bet = chips(t["opponent_bet"], "opponent_bet");
  const Json& u = t["uncertain_fields"];
  if (!u.is_array()) invalid("uncertain_fields must be an array");
  for (const auto& e : u) {
    if (!e.is_string()) invalid("uncertain_fields entries must be strings");
    ps.table.uncertain_fields.push_back(e.get<std::string>());
  }
  return ps;
}

void check_schema(const ParsedState& ps) {
  check_board(ps.table.community_cards);
  for (const ChipCount* c : {&ps.table.my_chips, &ps.table.opponent_chips, &ps.table.my_current_bet,
                             &ps.table.opponent_bet}) {
    for (auto d : kAscending) {
      if ((*c)[d] < 0) invalid("negative chip count");
    }
  }
  for (Card c : ps.table.community_cards) {
    if (c.rank < 2 || c.rank > 14) invalid("invalid card");
  }
}

}  // namespace holdem
