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

#include "holdem/errors.hpp"

namespace holdem {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::duplicate_card: return "DuplicateCard";
    case Errc::wrong_card_count: return "WrongCardCount";
    case Errc::incomplete_board: return "IncompleteBoard";
    case Errc::not_robot_turn: return "NotRobotTurn";
    case Errc::betting_round_open: return "BettingRoundOpen";
    case Errc::deck_exhausted: return "DeckExhausted";
    case Errc::already_settled: return "AlreadySettled";
    case Errc::not_representable: return "NotRepresentable";
    case Errc::illegal_primitive: return "IllegalPrimitive";
    case Errc::schema_invalid: return "SchemaInvalid";
    case Errc::stale_context: return "StaleContext";
    case Errc::effect_inapplicable: return "EffectInapplicable";
    case Errc::empty_run: return "EmptyRun";
    case Errc::missing_label: return "MissingLabel";
    case Errc::malformed_document: return "MalformedDocument";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::empty_log: return "EmptyLog";
    case Errc::non_contiguous: return "NonContiguous";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::script_exhausted: return "ScriptExhausted";
    case Errc::external_timeout: return "ExternalTimeout";
    case Errc::config_unresolvable: return "ConfigUnresolvable";
    case Errc::unknown_session: return "UnknownSession";
    case Errc::out_of_turn: return "OutOfTurn";
    case Errc::malformed: return "Malformed";
  }
  return "Unknown";
}

}  // namespace holdem
