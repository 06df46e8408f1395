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
#include <string>
#include <string_view>
#include <vector>

#include "holdem/codec.hpp"
#include "holdem/tabletop.hpp"

namespace holdem {

enum class ShowdownOutcome { win, lose, not_showdown };

std::string_view to_string(ShowdownOutcome o);
ShowdownOutcome parse_showdown_outcome(std::string_view text);

/// The eight perception challenge fields.
enum class Field { LS, TO, BI, CC, CB, RCI, OCI, SO };

inline constexpr std::array<Field, 8> kFields{Field::LS, Field::TO,  Field::BI,  Field::CC,
                                              Field::CB, Field::RCI, Field::OCI, Field::SO};

std::string_view to_string(Field f);
std::optional<Field> parse_field(std::string_view text);

/// Schema name recorded in uncertain_fields for a challenge field.
std::string_view schema_name(Field f);

struct TableView {
  bool scene_stable = true;
  bool is_my_turn = true;
  std::vector<Card> community_cards;
  ChipCount my_chips;
  ChipCount opponent_chips;
  ChipCount my_current_bet;
  ChipCount opponent_bet;
  std::vector<std::string> uncertain_fields;

  friend bool operator==(const TableView&, const TableView&) = default;
};

/// Structured summary of one captured state, field for field the perceiver
/// output schema.
struct ParsedState {
  LoopStage loop_stage = LoopStage::idle;
  Blind blind = Blind::big_blind;
  ShowdownOutcome showdown_outcome = ShowdownOutcome::not_showdown;
  TableView table;

  friend bool operator==(const ParsedState&, const ParsedState&) = default;
};

Json encode(const ParsedState& ps);

/// Strict decode: exactly the schema keys, in-domain labels, four-key chip
/// maps with non-negative counts, a board of 0/3/4/5 distinct cards.
/// Throws Errc::schema_invalid.
ParsedState decode_parsed_state(const Json& j);

/// Throws Errc::schema_invalid if a constructed value breaks the schema.
void check_schema(const ParsedState& ps);

}  // namespace holdem
