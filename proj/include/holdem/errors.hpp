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

#include <stdexcept>
#include <string>
#include <string_view>

namespace holdem {

/// Machine-readable failure codes. The string form (see to_string) is what
/// the wire protocol and CLI report.
enum class Errc {
  duplicate_card,
  wrong_card_count,
  incomplete_board,
  not_robot_turn,
  betting_round_open,
  deck_exhausted,
  already_settled,
  not_representable,
  illegal_primitive,
  schema_invalid,
  stale_context,
  effect_inapplicable,
  empty_run,
  missing_label,
  malformed_document,
  duplicate_id,
  empty_log,
  non_contiguous,
  unknown_label,
  script_exhausted,
  external_timeout,
  config_unresolvable,
  unknown_session,
  out_of_turn,
  malformed,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace holdem
