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

#include <string>
#include <string_view>

#include "holdem/errors.hpp"
#include "holdem/tabletop.hpp"
#include "json.hpp"

namespace holdem {

// Insertion-ordered so every document has one fixed byte layout.
using Json = nlohmann::ordered_json;

/// Compact single-line form used in logs, golden files and the wire.
std::string dump(const Json& j);

/// Parses text; any syntax error becomes Errc::malformed_document.
Json parse_json(std::string_view text);

Json encode(Card c);
Json encode(const ChipCount& c);
Json encode(const std::vector<Card>& cards);
Json encode(const TableState& s);
Json encode(const TableConfig& c);

// Decoders validate shape and domain and throw Errc::malformed_document.
Card decode_card(const Json& j);
ChipCount decode_chips(const Json& j);
std::vector<Card> decode_cards(const Json& j);
TableState decode_table(const Json& j);
TableConfig decode_table_config(const Json& j);

/// Reads a key that must be present.
const Json& require(const Json& obj, std::string_view key);

/// Runs a decoder, turning library type errors into Errc::malformed_document.
template <typename F>
auto decoding(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::malformed_document, e.what());
  }
}

}  // namespace holdem
