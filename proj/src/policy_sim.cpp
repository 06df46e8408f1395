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

#include "holdem/policy_sim.hpp"

#include <cmath>

#include "holdem/errors.hpp"

namespace holdem {
namespace {

// Reference per-policy counts over the 80-trial schedule and the grouped
// SPSR/TCR percentages (pickup, chip push, chip pull, put-down/show).
const std::vector<PolicyRow> kRows = {
    {"pi05", "pi0.5", {38, 11, 31, 0}, {{{100, 100}, {25, 35}, {15, 30}, {50, 80}}}},
    {"pi0", "pi0", {38, 8, 33, 1}, {{{100, 100}, {25, 30}, {15, 20}, {50, 80}}}},
    {"rdt", "RDT", {24, 13, 40, 3}, {{{75, 80}, {15, 25}, {5, 10}, {25, 70}}}},
    {"dp-dino", "DP (DINO)", {21, 8, 48, 3}, {{{50, 50}, {25, 45}, {10, 20}, {20, 30}}}},
    {"dp-transformer", "DP-Transformer", {11, 5, 46, 18}, {{{25, 25}, {10, 15}, {15, 20}, {5, 20}}}},
    {"rdt-small", "RDT-small", {11, 3, 59, 7}, {{{25, 25}, {15, 20}, {5, 5}, {10, 20}}}},
    {"act", "ACT", {8, 4, 67, 1}, {{{25, 30}, {5, 5}, {0, 0}, {10, 25}}}},
    {"baku", "BAKU", {5, 5, 67, 3}, {{{20, 30}, {0, 0}, {0, 10}, {5, 10}}}},
    {"dp-unet", "DP-UNet", {1, 0, 79, 0}, {{{0, 0}, {0, 0}, {5, 5}, {0, 0}}}},
};

Quadruple from_counts(const std::array<int, 4>& c) {
  const double n = c[0] + c[1] + c[2] + c[3];
  return {c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

// Group rows publish only SP and SP+DC; the failure mass is split in the
// row's aggregate TF:DF ratio.
Quadruple from_group(const std::array<double, 2>& g, const std::array<int, 4>& counts) {
  const double sp = g[0] / 100.0;
  const double dc = (g[1] - g[0]) / 100.0;
  const double rest = 1.0 - sp - dc;
  const double fail = counts[2] + counts[3];
  const double tf_share = fail > 0 ? counts[2] / fail : 1.0;
  return {sp, dc, rest * tf_share, rest * (1.0 - tf_share)};
}

void require_chip(const ChipCount& zone, Denomination d, RobotPrimitive prim) {
  if (zone[d] <= 0) throw Error(Errc::effect_inapplicable, std::string(to_string(prim)) + ": no chip to move");
}

}  // namespace

bool valid_quadruple(const Quadruple& q) {
  double sum = 0;
  for (double p : q) {
    if (!(p >= 0.0)) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= 1e-9;
}

OutcomeProfile OutcomeProfile::uniform(std::string name, const Quadruple& q) {
  OutcomeProfile p;
  p.name = std::move(name);
  p.per_primitive.fill(q);
  return p;
}

const std::vector<PolicyRow>& reference_policy_rows() { return kRows; }

OutcomeProfile builtin_outcome_profile(const std::string& name) {
  if (name == "all-sp") return OutcomeProfile::uniform(name, {1, 0, 0, 0});
  if (name.rfind("tf-", 0) == 0) {
    try {
      std::size_t used = 0;
      const int pct = std::stoi(name.substr(3), &used);
      if (used == name.size() - 3 && pct >= 0 && pct <= 100) {
        const double tf = pct / 100.0;
        return OutcomeProfile::uniform(name, {1.0 - tf, 0, tf, 0});
      }
    } catch (const std::exception&) {
    }
  }
  for (const auto& row : kRows) {
    if (name == row.key + "-aggregate") return OutcomeProfile::uniform(name, from_counts(row.counts));
    if (name == row.key + "-groups") {
      OutcomeProfile p;
      p.name = name;
      for (int id = 0; id < kRobotPrimitiveCount; ++id) {
        const auto g = group_of(static_cast<RobotPrimitive>(id));
        p.per_primitive[id] = from_group(row.groups[static_cast<std::size_t>(g)], row.counts);
      }
      return p;
    }
  }
  throw Error(Errc::config_unresolvable, "unknown outcome profile '" + name + "'");
}

std::vector<std::string> builtin_outcome_profile_names() {
  std::vector<std::string> out{"all-sp"};
  for (const auto& row : kRows) {
    out.push_back(row.key + "-aggregate");
    out.push_back(row.key + "-groups");
  }
  return out;
}

OutcomeLevel sample_outcome(RobotPrimitive prim, const OutcomeProfile& prof, Rng& rng) {
  const Quadruple& q = prof.of(prim);
  const double u = rng.uniform01();
  double acc = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    acc += q[i];
    if (u < acc) return kOutcomeLevels[i];
  }
  // Guard against rounding: never land on a zero-probability tail level.
  for (std::size_t i = 4; i-- > 0;) {
    if (q[i] > 0) return kOutcomeLevels[i];
  }
  return OutcomeLevel::SP;
}

TableState nominal_effect(TableState t, RobotPrimitive prim) {
  if (auto d = denomination_of(prim)) {
    if (group_of(prim) == PrimitiveGroup::chip_push) {
      require_chip(t.robot_inventory, *d, prim);
      --t.robot_inventory[*d];
      ++t.robot_bet_zone[*d];
    } else {
      ChipCount& zone = t.robot_bet_zone[*d] > 0 ? t.robot_bet_zone : t.opponent_bet_zone;
      require_chip(zone, *d, prim);
      --zone[*d];
      ++t.robot_inventory[*d];
    }
    return t;
  }
  const Side side = *side_of(prim);
  auto& slot = t.hole(side);
  auto bad = [&](const char* why) {
    return Error(Errc::effect_inapplicable, std::string(to_string(prim)) + ": " + why);
  };
  if (!slot) throw bad("slot is empty");
  const auto& other_slot = t.hole(side == Side::left ? Side::right : Side::left);
  switch (group_of(prim)) {
    case PrimitiveGroup::pickup:
      if (slot->facing == Facing::in_hand) throw bad("card already in hand");
      if (other_slot && other_slot->facing == Facing::in_hand) throw bad("hand is occupied");
      slot->facing = Facing::in_hand;
      break;
    default:
      if (prim == put_down_for(side)) {
        if (slot->facing != Facing::in_hand) throw bad("no card in hand");
        slot->facing = Facing::down;
      } else {
        if (slot->facing == Facing::up) throw bad("card already face up");
        slot->facing = Facing::up;
      }
      break;
  }
  return t;
}

AtomResult execute_atom(TableState truth, RobotPrimitive prim, OutcomeLevel outcome) {
  // Applicability is a property of the state, not of the sampled outcome.
  TableState after = nominal_effect(truth, prim);
  switch (outcome) {
    case OutcomeLevel::SP: return {std::move(after), LoopStage::atom_idle};
    case OutcomeLevel::DC: return {std::move(after), LoopStage::down};
    case OutcomeLevel::TF: return {std::move(truth), LoopStage::to_recover};
    case OutcomeLevel::DF: return {std::move(truth), LoopStage::down};
  }
  return {std::move(truth), LoopStage::down};
}

Json encode(const OutcomeProfile& p) {
  Json j;
  j["name"] = p.name;
  j["settle_delay"] = p.settle_delay;
  j["acting_delay"] = p.acting_delay;
  j["dc_continuable"] = p.dc_continuable;
  Json prims;
  for (int id = 0; id < kRobotPrimitiveCount; ++id) {
    const auto& q = p.per_primitive[id];
    prims[std::string(to_string(static_cast<RobotPrimitive>(id)))] = Json::array({q[0], q[1], q[2], q[3]});
  }
  j["primitives"] = prims;
  return j;
}

OutcomeProfile decode_outcome_profile(const Json& j) {
  return decoding([&] {
    OutcomeProfile p;
    p.name = require(j, "name").get<std::string>();
    if (j.contains("settle_delay")) p.settle_delay = j["settle_delay"].get<int>();
    if (j.contains("acting_delay")) p.acting_delay = j["acting_delay"].get<int>();
    if (j.contains("dc_continuable")) p.dc_continuable = j["dc_continuable"].get<bool>();
    if (p.settle_delay < 0 || p.acting_delay < 0) throw Error(Errc::malformed_document, "delays must be non-negative");
    std::array<bool, kRobotPrimitiveCount> seen{};
    // Keys are primitive names or group names; primitive entries win.
    for (const auto& [key, value] : require(j, "primitives").items()) {
      Quadruple q{};
      if (!value.is_array() || value.size() != 4) throw Error(Errc::malformed_document, key + ": need 4 probabilities");
      for (std::size_t i = 0; i < 4; ++i) q[i] = value[i].get<double>();
      if (!valid_quadruple(q)) throw Error(Errc::malformed_document, key + ": probabilities must sum to 1");
      if (auto prim = parse_robot_primitive(key)) {
        p.per_primitive[id_of(*prim)] = q;
        seen[id_of(*prim)] = true;
      } else if (auto group = parse_primitive_group(key)) {
        for (int id = 0; id < kRobotPrimitiveCount; ++id) {
          if (group_of(static_cast<RobotPrimitive>(id)) == *group && !seen[id]) p.per_primitive[id] = q;
        }
      } else {
        throw Error(Errc::malformed_document, "unknown primitive or group '" + key + "'");
      }
    }
    for (const auto& q : p.per_primitive) {
      if (!valid_quadruple(q)) throw Error(Errc::malformed_document, "profile leaves a primitive unspecified");
    }
    return p;
  });
}

}  // namespace holdem
