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

#include "holdem/reference_set.hpp"

#include <algorithm>

#include "holdem/perceiver_sim.hpp"
#include "holdem/rng.hpp"

namespace holdem {

const std::vector<int> kOutcomeJudgeIds{19, 23, 30, 31, 32, 33, 36};
const std::vector<int> kTableDecisionIds{9, 11, 13, 14, 18, 20, 26, 27, 35};
const std::vector<int> kEmptyBoardIds{9, 11, 26};

namespace {

bool contains(const std::vector<int>& ids, int id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); }

ProblemClass class_of(int id, int& others_seen) {
  if (contains(kOutcomeJudgeIds, id)) return ProblemClass::outcome_judge;
  if (contains(kTableDecisionIds, id)) return ProblemClass::table_decision;
  static constexpr ProblemClass cycle[] = {ProblemClass::turn_gate, ProblemClass::robot_progress,
                                           ProblemClass::held_card_read, ProblemClass::recovery_safety};
  return cycle[others_seen++ % 4];
}

// Moves up to `n` chips per denomination from inventory to bet zone.
void commit(TableState& t, Seat seat, Rng& rng) {
  for (Denomination d : kAscending) {
    const int have = t.inventory(seat)[d];
    const int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(have, 2)) + 1));
    t.inventory(seat)[d] -= n;
    t.bet_zone(seat)[d] += n;
  }
}

void deal_board(TableState& t, std::size_t n) {
  t.community.assign(t.deck.begin(), t.deck.begin() + static_cast<std::ptrdiff_t>(n));
  t.deck.erase(t.deck.begin(), t.deck.begin() + static_cast<std::ptrdiff_t>(n));
  t.street = n == 0 ? Street::preflop : n == 3 ? Street::flop : n == 4 ? Street::turn : Street::river;
}

}  // namespace

std::vector<PerceptionProblem> generate_reference_set(const std::string& noise_profile, std::uint64_t seed) {
  const NoiseProfile noise = builtin_noise_profile(noise_profile);
  Rng rng(seed, 0x726566);
  std::vector<PerceptionProblem> out;
  int others = 0;
  int boards = 0;
  for (int id = 1; id <= 36; ++id) {
    TableConfig cfg;
    cfg.deck_seed = derive_seed(seed, static_cast<std::uint64_t>(id));
    cfg.robot_blind = id % 2 == 0 ? Blind::big_blind : Blind::small_blind;
    TableState t = new_initial_table(cfg);
    t.is_robot_turn = rng.coin();

    PerceptionProblem p;
    p.id = "p" + std::to_string(id);
    p.problem_class = class_of(id, others);
    LoopStage stage = LoopStage::idle;
    ShowdownOutcome outcome = ShowdownOutcome::not_showdown;
    switch (p.problem_class) {
      case ProblemClass::table_decision:
        deal_board(t, contains(kEmptyBoardIds, id) ? 0 : static_cast<std::size_t>(3 + boards++ % 3));
        commit(t, Seat::robot, rng);
        commit(t, Seat::opponent, rng);
        t.is_robot_turn = true;
        break;
      case ProblemClass::outcome_judge:
        deal_board(t, 5);
        commit(t, Seat::robot, rng);
        commit(t, Seat::opponent, rng);
        t.street = Street::showdown;
        stage = rng.coin() ? LoopStage::win : LoopStage::lose;
        outcome = stage == LoopStage::win ? ShowdownOutcome::win : ShowdownOutcome::lose;
        break;
      case ProblemClass::turn_gate:
        deal_board(t, rng.below(2) * 3);
        break;
      case ProblemClass::robot_progress:
        stage = rng.coin() ? LoopStage::acting : LoopStage::atom_idle;
        t.scene_stable = stage != LoopStage::acting;
        break;
      case ProblemClass::held_card_read:
        stage = LoopStage::atom_idle;
        t.hole(rng.coin() ? Side::left : Side::right)->facing = Facing::in_hand;
        break;
      case ProblemClass::recovery_safety:
        stage = rng.coin() ? LoopStage::to_recover : LoopStage::down;
        t.scene_stable = false;
        break;
    }
    p.label = project_truth(t, stage, outcome);
    Rng prng(derive_seed(seed, 1000 + static_cast<std::uint64_t>(id)), 0x707265);
    p.prediction = perceive(t, stage, outcome, noise, prng).parsed;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace holdem
