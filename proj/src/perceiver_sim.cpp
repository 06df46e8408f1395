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

#include "holdem/perceiver_sim.hpp"

#include <algorithm>

#include "holdem/errors.hpp"

namespace holdem {
namespace {

const std::vector<PerceiverRow> kRows = {
    {"gpt55", "GPT 5.5", {72.2, 80.6, 100.0, 61.5, 45.8, 62.5, 35.4, 76.2}, 66.8, 31.5},
    {"gpt54", "GPT 5.4", {65.7, 93.5, 100.0, 23.1, 31.2, 56.2, 18.8, 47.6}, 54.5, 31.5},
    {"gpt54mini", "GPT 5.4 mini", {56.5, 94.4, 99.1, 33.3, 14.6, 29.2, 18.8, 47.6}, 49.2, 25.9},
    {"opus47", "Opus 4.7", {43.5, 93.5, 100.0, 43.6, 31.2, 37.5, 43.8, 0.0}, 49.1, 34.3},
    {"sonnet46", "Sonnet 4.6", {46.3, 88.0, 100.0, 23.1, 10.4, 29.2, 22.9, 14.3}, 41.8, 25.0},
    {"haiku45", "Haiku 4.5", {47.2, 68.5, 91.7, 35.9, 12.5, 25.0, 18.8, 0.0}, 37.4, 13.9},
    {"gemini3flash", "Gemini 3 Flash", {63.9, 77.8, 100.0, 28.2, 18.8, 29.2, 22.9, 71.4}, 51.5, 20.4},
    {"gemini31flashlite", "Gemini 3.1 Flash L.", {27.8, 73.1, 94.4, 28.2, 12.5, 22.9, 14.6, 0.0}, 34.2, 10.2},
};

void nudge(ChipCount& c, Rng& rng) {
  const Denomination d = kAscending[rng.below(4)];
  if (c[d] == 0 || rng.coin()) ++c[d];
  else --c[d];
}

Card fresh_card(const std::vector<Card>& avoid, Rng& rng) {
  for (;;) {
    const Card c = Card::from_index(static_cast<int>(rng.below(52)));
    if (std::find(avoid.begin(), avoid.end(), c) == avoid.end()) return c;
  }
}

void corrupt_board(std::vector<Card>& board, Rng& rng) {
  const std::size_t n = board.size();
  if (n > 0 && rng.coin()) {
    // Misread one card.
    const std::size_t i = rng.below(n);
    board[i] = fresh_card(board, rng);
    return;
  }
  // Miscount: move to a neighbouring legal board length.
  std::size_t target = 0;
  switch (n) {
    case 0: target = 3; break;
    case 3: target = rng.coin() ? 0 : 4; break;
    case 4: target = rng.coin() ? 3 : 5; break;
    default: target = 4; break;
  }
  while (board.size() > target) board.erase(board.begin() + static_cast<std::ptrdiff_t>(rng.below(board.size())));
  while (board.size() < target) board.push_back(fresh_card(board, rng));
}

}  // namespace

const std::vector<PerceiverRow>& reference_perceiver_rows() { return kRows; }

NoiseProfile builtin_noise_profile(const std::string& name) {
  NoiseProfile p;
  p.name = name;
  if (name == "zero") return p;
  if (name.rfind("uniform-", 0) == 0) {
    try {
      std::size_t used = 0;
      const int pct = std::stoi(name.substr(8), &used);
      if (used == name.size() - 8 && pct >= 0 && pct <= 100) {
        p.error_rate.fill(pct / 100.0);
        return p;
      }
    } catch (const std::exception&) {
    }
  }
  for (const auto& row : kRows) {
    if (name == row.key + "-like") {
      for (std::size_t i = 0; i < 8; ++i) p.error_rate[i] = 1.0 - row.accuracy[i] / 100.0;
      return p;
    }
  }
  throw Error(Errc::config_unresolvable, "unknown noise profile '" + name + "'");
}

ParsedState project_truth(const TableState& truth, LoopStage stage, ShowdownOutcome outcome) {
  ParsedState ps;
  ps.loop_stage = stage;
  ps.blind = truth.blind;
  ps.showdown_outcome = outcome;
  ps.table.scene_stable = truth.scene_stable;
  ps.table.is_my_turn = truth.is_robot_turn;
  ps.table.community_cards = truth.community;
  ps.table.my_chips = truth.robot_inventory;
  ps.table.opponent_chips = truth.opponent_inventory;
  ps.table.my_current_bet = truth.robot_bet_zone;
  ps.table.opponent_bet = truth.opponent_bet_zone;
  return ps;
}

bool Perception::any_corrupted() const {
  return std::any_of(corrupted.begin(), corrupted.end(), [](bool b) { return b; });
}

void corrupt(ParsedState& ps, Field f, Rng& rng) {
  switch (f) {
    case Field::LS: {
      const auto shift = 1 + rng.below(kLoopStages.size() - 1);
      ps.loop_stage = kLoopStages[(static_cast<std::size_t>(ps.loop_stage) + shift) % kLoopStages.size()];
      break;
    }
    case Field::TO: ps.table.is_my_turn = !ps.table.is_my_turn; break;
    case Field::BI: ps.blind = ps.blind == Blind::big_blind ? Blind::small_blind : Blind::big_blind; break;
    case Field::CC: corrupt_board(ps.table.community_cards, rng); break;
    case Field::CB: nudge(rng.coin() ? ps.table.my_current_bet : ps.table.opponent_bet, rng); break;
    case Field::RCI: nudge(ps.table.my_chips, rng); break;
    case Field::OCI: nudge(ps.table.opponent_chips, rng); break;
    case Field::SO: {
      constexpr std::array<ShowdownOutcome, 3> all{ShowdownOutcome::win, ShowdownOutcome::lose,
                                                   ShowdownOutcome::not_showdown};
      const auto shift = 1 + rng.below(2);
      ps.showdown_outcome = all[(static_cast<std::size_t>(ps.showdown_outcome) + shift) % 3];
      break;
    }
  }
}

Perception perceive(const TableState& truth, LoopStage stage, ShowdownOutcome outcome, const NoiseProfile& noise,
                    Rng& rng) {
  Perception out{project_truth(truth, stage, outcome), {}};
  for (Field f : kFields) {
    // One draw per field keeps the stream aligned whatever the rates are.
    const double u = rng.uniform01();
    if (u < noise.rate(f)) {
      corrupt(out.parsed, f, rng);
      out.corrupted[static_cast<std::size_t>(f)] = true;
      if (noise.self_aware) out.parsed.table.uncertain_fields.emplace_back(schema_name(f));
    }
  }
  return out;
}

}  // namespace holdem
