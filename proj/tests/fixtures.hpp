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
#include <vector>

#include "holdem/session.hpp"

namespace fixtures {

inline std::vector<holdem::AgentPrimitive> script(const std::vector<std::string>& texts) {
  std::vector<holdem::AgentPrimitive> out;
  for (const auto& t : texts) out.push_back(*holdem::parse_agent_primitive(t));
  return out;
}

// Robot raises 10, checks twice, calls a 200-chip bet and reveals both cards.
inline holdem::SessionConfig third_trajectory() {
  holdem::SessionConfig c;
  c.robot_agent = holdem::AgentSpec::scripted(
      script({"raise(10)", "check", "check", "call", "show_card(L)", "show_card(R)"}));
  c.opponent_agent = holdem::AgentSpec::scripted(script({"call", "check", "check", "raise(200)"}));
  return c;
}

}  // namespace fixtures
