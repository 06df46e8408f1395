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

#include "holdem/codec.hpp"

#include "holdem/errors.hpp"

namespace holdem {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::malformed_document, what); }

bool get_bool(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (!v.is_boolean()) fail(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

int get_int(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (!v.is_number_integer()) fail(std::string(key) + " must be an integer");
  return v.get<int>();
}

std::string get_string(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (!v.is_string()) fail(std::string(key) + " must be a string");
  return v.get<std::string>();
}

Json encode_hole(const std::optional<HoleCard>& h) {
  if (!h) return nullptr;
  Json j;
  j["card"] = encode(h->card);
  j["facing"] = std::string(to_string(h->facing));
  return j;
}

std::optional<HoleCard> decode_hole(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_object()) fail("hole slot must be an object or null");
  return HoleCard{decode_card(require(j, "card")), parse_facing(get_string(j, "facing"))};
}

}  // namespace

std::string dump(const Json& j) { return j.dump(); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
}

const Json& require(const Json& obj, std::string_view key) {
  if (!obj.is_object()) fail("expected an object around '" + std::string(key) + "'");
  auto it = obj.find(std::string(key));
  if (it == obj.end()) fail("missing field '" + std::string(key) + "'");
  return *it;
}

Json encode(Card c) { return to_string(c); }

Json encode(const ChipCount& c) {
  Json j = Json::object();
  for (auto d : kAscending) j[std::to_string(value_of(d))] = c[d];
  return j;
}

Json encode(const std::vector<Card>& cards) {
  Json j = Json::array();
  for (Card c : cards) j.push_back(encode(c));
  return j;
}

Card decode_card(const Json& j) {
  if (!j.is_string()) fail("card must be a string");
  return parse_card(j.get<std::string>());
}

ChipCount decode_chips(const Json& j) {
  if (!j.is_object() || j.size() != 4) fail("chip map must have exactly the keys 5, 10, 50, 100");
  ChipCount c;
  for (auto d : kAscending) {
    const int n = get_int(j, std::to_string(value_of(d)));
    if (n < 0) fail("negative chip count");
    c[d] = n;
  }
  return c;
}

std::vector<Card> decode_cards(const Json& j) {
  if (!j.is_array()) fail("card list must be an array");
  std::vector<Card> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(decode_card(e));
  return out;
}

Json encode(const TableState& s) {
  Json j;
  j["street"] = std::string(to_string(s.street));
  j["blind"] = std::string(to_string(s.blind));
  j["is_robot_turn"] = s.is_robot_turn;
  j["scene_stable"] = s.scene_stable;
  j["hole_left"] = encode_hole(s.hole_left);
  j["hole_right"] = encode_hole(s.hole_right);
  j["opponent_hole"] = Json::array({encode_hole(s.opponent_hole[0]), encode_hole(s.opponent_hole[1])});
  j["community_cards"] = encode(s.community);
  j["robot_inventory"] = encode(s.robot_inventory);
  j["opponent_inventory"] = encode(s.opponent_inventory);
  j["robot_bet_zone"] = encode(s.robot_bet_zone);
  j["opponent_bet_zone"] = encode(s.opponent_bet_zone);
  Json b;
  b["open"] = s.betting.open;
  b["forced_blinds"] = s.betting.forced_blinds;
  b["robot_blind_owed"] = s.betting.robot_blind_owed;
  b["robot_street_base"] = s.betting.robot_street_base;
  b["opponent_street_base"] = s.betting.opponent_street_base;
  b["robot_acted"] = s.betting.robot_acted;
  b["opponent_acted"] = s.betting.opponent_acted;
  b["preflop_leader"] = std::string(to_string(s.betting.preflop_leader));
  b["folded"] = s.betting.folded ? Json(std::string(to_string(*s.betting.folded))) : Json(nullptr);
  b["result"] = s.betting.result ? Json(std::string(to_string(*s.betting.result))) : Json(nullptr);
  j["betting"] = b;
  j["deck"] = encode(s.deck);
  return j;
}

TableState decode_table(const Json& j) {
  TableState s;
  s.street = parse_street(get_string(j, "street"));
  s.blind = parse_blind(get_string(j, "blind"));
  s.is_robot_turn = get_bool(j, "is_robot_turn");
  s.scene_stable = get_bool(j, "scene_stable");
  s.hole_left = decode_hole(require(j, "hole_left"));
  s.hole_right = decode_hole(require(j, "hole_right"));
  const Json& opp = require(j, "opponent_hole");
  if (!opp.is_array() || opp.size() != 2) fail("opponent_hole must have two entries");
  s.opponent_hole[0] = decode_hole(opp[0]);
  s.opponent_hole[1] = decode_hole(opp[1]);
  s.community = decode_cards(require(j, "community_cards"));
  s.robot_inventory = decode_chips(require(j, "robot_inventory"));
  s.opponent_inventory = decode_chips(require(j, "opponent_inventory"));
  s.robot_bet_zone = decode_chips(require(j, "robot_bet_zone"));
  s.opponent_bet_zone = decode_chips(require(j, "opponent_bet_zone"));
  const Json& b = require(j, "betting");
  s.betting.open = get_bool(b, "open");
  s.betting.forced_blinds = get_bool(b, "forced_blinds");
  s.betting.robot_blind_owed = get_int(b, "robot_blind_owed");
  s.betting.robot_street_base = get_int(b, "robot_street_base");
  s.betting.opponent_street_base = get_int(b, "opponent_street_base");
  s.betting.robot_acted = get_bool(b, "robot_acted");
  s.betting.opponent_acted = get_bool(b, "opponent_acted");
  s.betting.preflop_leader = parse_seat(get_string(b, "preflop_leader"));
  const Json& folded = require(b, "folded");
  if (!folded.is_null()) s.betting.folded = parse_seat(get_string(b, "folded"));
  const Json& result = require(b, "result");
  if (!result.is_null()) s.betting.result = parse_hand_result(get_string(b, "result"));
  s.deck = decode_cards(require(j, "deck"));
  return s;
}

Json encode(const TableConfig& c) {
  Json j;
  j["robot_chips"] = encode(c.robot_chips);
  j["opponent_chips"] = encode(c.opponent_chips);
  j["robot_blind"] = std::string(to_string(c.robot_blind));
  j["deck_seed"] = c.deck_seed;
  j["preflop_leader"] = std::string(to_string(c.preflop_leader));
  j["forced_blinds"] = c.forced_blinds;
  return j;
}

TableConfig decode_table_config(const Json& j) {
  TableConfig c;
  if (!j.is_object()) fail("table config must be an object");
  if (j.contains("robot_chips")) c.robot_chips = decode_chips(j["robot_chips"]);
  if (j.contains("opponent_chips")) c.opponent_chips = decode_chips(j["opponent_chips"]);
  if (j.contains("robot_blind")) c.robot_blind = parse_blind(get_string(j, "robot_blind"));
  if (j.contains("deck_seed")) {
    if (!j["deck_seed"].is_number_unsigned() && !j["deck_seed"].is_number_integer()) fail("deck_seed must be an integer");
    c.deck_seed = j["deck_seed"].get<std::uint64_t>();
  }
  if (j.contains("preflop_leader")) c.preflop_leader = parse_seat(get_string(j, "preflop_leader"));
  if (j.contains("forced_blinds")) c.forced_blinds = get_bool(j, "forced_blinds");
  return c;
}

}  // namespace holdem
