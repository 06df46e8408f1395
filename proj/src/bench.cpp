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

#include "holdem/bench.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "holdem/chip_split.hpp"
#include "holdem/rng.hpp"

namespace holdem {

std::string_view to_string(Placement p) {
  switch (p) {
    case Placement::inventory: return "inventory";
    case Placement::left: return "left";
    case Placement::right: return "right";
  }
  return "inventory";
}

namespace {

constexpr int kCardTrials = 10;  // per pick-up primitive
constexpr int kChipTrials = 5;   // per push, pull, put-down and show primitive

std::vector<Denomination> others(Denomination d) {
  std::vector<Denomination> out;
  for (Denomination o : kAscending) {
    if (o != d) out.push_back(o);
  }
  return out;
}

void shuffle_in_place(std::vector<Denomination>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

std::vector<TrialSpec> push_trials(Denomination d, Rng& rng) {
  std::vector<TrialSpec> out;
  for (int r = 1; r <= kChipTrials; ++r) {
    TrialSpec t;
    t.primitive = push_for(d);
    t.repetition = r;
    t.scene.chips.push_back({d, Placement::inventory, true});
    for (int k = 1; k < r; ++k) {
      auto pool = others(d);
      t.scene.chips.push_back({pool[rng.below(pool.size())], Placement::inventory, false});
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Five-chip layout: target on both sides plus the three other denominations;
// later trials drop two non-targets from the left, then the right non-target
// and the right target.
std::vector<TrialSpec> pull_trials(Denomination d, Rng& rng) {
  auto rest = others(d);
  shuffle_in_place(rest, rng);
  std::vector<ChipToken> layout{{d, Placement::left, true},
                                {rest[0], Placement::left, false},
                                {rest[1], Placement::left, false},
                                {d, Placement::right, true},
                                {rest[2], Placement::right, false}};
  const std::array<ChipToken, 4> removal{layout[1], layout[2], layout[4], layout[3]};
  std::vector<TrialSpec> out;
  for (int r = 1; r <= kChipTrials; ++r) {
    TrialSpec t;
    t.primitive = pull_for(d);
    t.repetition = r;
    t.scene.chips = layout;
    out.push_back(t);
    if (r <= static_cast<int>(removal.size())) {
      auto it = std::find(layout.begin(), layout.end(), removal[static_cast<std::size_t>(r - 1)]);
      layout.erase(it);
    }
  }
  return out;
}

}  // namespace

std::vector<TrialSpec> generate_schedule(std::uint64_t seed) {
  Rng rng(seed, 0x7363686564);
  std::vector<TrialSpec> out;
  for (Side s : {Side::left, Side::right}) {
    for (int r = 1; r <= kCardTrials; ++r) {
      TrialSpec t;
      t.primitive = pick_up_for(s);
      t.repetition = r;
      t.scene.card_side = s;
      t.scene.card_facing = Facing::down;
      out.push_back(t);
    }
  }
  for (Denomination d : kAscending) {
    auto v = push_trials(d, rng);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (Denomination d : kAscending) {
    auto v = pull_trials(d, rng);
    out.insert(out.end(), v.begin(), v.end());
  }
  // Put-down chains from pick-up trials 1-5, show from 6-10, same side.
  for (RobotPrimitive p : {RobotPrimitive::put_down_left, RobotPrimitive::put_down_right,
                           RobotPrimitive::show_left, RobotPrimitive::show_right}) {
    const Side s = *side_of(p);
    const int side_base = s == Side::left ? 0 : kCardTrials;
    const bool is_show = p == RobotPrimitive::show_left || p == RobotPrimitive::show_right;
    for (int r = 1; r <= kChipTrials; ++r) {
      TrialSpec t;
      t.primitive = p;
      t.repetition = r;
      t.scene.card_side = s;
      t.scene.card_facing = Facing::in_hand;
      t.scene.chained_from = side_base + (is_show ? kChipTrials : 0) + r - 1;
      out.push_back(t);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TrialSpec& a, const TrialSpec& b) { return id_of(a.primitive) < id_of(b.primitive); });
  // Chain indices were assigned before sorting; pick-ups stay first so they hold.
  return out;
}

TableState scene_table(const TrialSpec& spec) {
  TableState t;
  t.deck = full_deck();
  t.betting.open = false;
  auto take = [&t](Card c) {
    t.deck.erase(std::find(t.deck.begin(), t.deck.end(), c));
    return c;
  };
  for (const ChipToken& tok : spec.scene.chips) {
    switch (tok.where) {
      case Placement::inventory: t.robot_inventory[tok.denomination] += 1; break;
      case Placement::left: t.robot_bet_zone[tok.denomination] += 1; break;
      case Placement::right: t.opponent_bet_zone[tok.denomination] += 1; break;
    }
  }
  if (spec.scene.card_side) {
    const Card c = take(spec.scene.card_side == Side::left ? Card{14, Suit::spades} : Card{13, Suit::hearts});
    t.hole(*spec.scene.card_side) = HoleCard{c, spec.scene.card_facing};
  }
  return t;
}

Json encode(const TrialSpec& t) {
  Json chips = Json::array();
  for (const ChipToken& tok : t.scene.chips) {
    chips.push_back(Json{{"denomination", value_of(tok.denomination)},
                         {"where", std::string(to_string(tok.where))},
                         {"target", tok.target}});
  }
  Json scene{{"chips", chips}};
  if (t.scene.card_side) {
    scene["card_side"] = std::string(to_string(*t.scene.card_side));
    scene["card_facing"] = std::string(to_string(t.scene.card_facing));
  }
  if (t.scene.chained_from) scene["chained_from"] = *t.scene.chained_from;
  return Json{{"primitive", std::string(to_string(t.primitive))},
              {"id", id_of(t.primitive)},
              {"repetition", t.repetition},
              {"scene", scene}};
}

// ---- aggregation ----------------------------------------------------------

namespace {

Ratio completion_share(const std::array<int, 4>& c, bool with_dc) {
  const int n = c[0] + c[1] + c[2] + c[3];
  return percent_of(c[0] + (with_dc ? c[1] : 0), n);
}

}  // namespace

OutcomeReport aggregate_counts(const std::array<int, 4>& counts) {
  OutcomeReport r;
  r.counts = counts;
  r.n = counts[0] + counts[1] + counts[2] + counts[3];
  if (r.n == 0) throw Error(Errc::empty_log, "no trials");
  r.spsr = completion_share(counts, false);
  r.tcr = completion_share(counts, true);
  return r;
}

OutcomeReport aggregate_outcomes(const std::vector<TrialOutcome>& log) {
  if (log.empty()) throw Error(Errc::empty_log, "no trials");
  std::array<int, 4> total{};
  std::array<std::array<int, 4>, 4> per_group{};
  for (const TrialOutcome& o : log) {
    const auto lvl = static_cast<std::size_t>(o.level);
    ++total[lvl];
    ++per_group[static_cast<std::size_t>(group_of(o.primitive))][lvl];
  }
  OutcomeReport r = aggregate_counts(total);
  for (std::size_t g = 0; g < 4; ++g) {
    const auto& c = per_group[g];
    const int n = c[0] + c[1] + c[2] + c[3];
    if (n == 0) continue;
    r.groups[g] = GroupRate{n, completion_share(c, false), completion_share(c, true)};
  }
  return r;
}

std::string format_rate_pair(const Ratio& spsr, const Ratio& tcr) {
  return format_percent(spsr) + "/" + format_percent(tcr);
}

Json encode(const TrialOutcome& o) {
  return Json{{"trial", o.trial},
              {"primitive", std::string(to_string(o.primitive))},
              {"level", std::string(to_string(o.level))}};
}

TrialOutcome decode_trial_outcome(const Json& j) {
  return decoding([&] {
    if (!j.is_object()) throw Error(Errc::malformed_document, "outcome must be an object");
    TrialOutcome o;
    o.trial = require(j, "trial").get<int>();
    const Json& p = require(j, "primitive");
    std::optional<RobotPrimitive> prim =
        p.is_number_integer() ? robot_primitive_from_id(p.get<int>()) : parse_robot_primitive(p.get<std::string>());
    if (!prim) throw Error(Errc::malformed_document, "unknown primitive " + p.dump());
    o.primitive = *prim;
    try {
      o.level = parse_outcome_level(require(j, "level").get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::malformed_document, e.what());
    }
    return o;
  });
}

Json encode(const OutcomeReport& r) {
  Json counts;
  for (OutcomeLevel l : kOutcomeLevels) counts[std::string(to_string(l))] = r.counts[static_cast<std::size_t>(l)];
  Json groups = Json::object();
  for (PrimitiveGroup g : kPrimitiveGroups) {
    const auto& gr = r.groups[static_cast<std::size_t>(g)];
    if (!gr) continue;
    groups[std::string(to_string(g))] =
        Json{{"n", gr->n}, {"spsr", format_percent(gr->spsr)}, {"tcr", format_percent(gr->tcr)}};
  }
  return Json{{"n", r.n},
              {"counts", counts},
              {"spsr", format_percent(r.spsr)},
              {"tcr", format_percent(r.tcr)},
              {"groups", groups}};
}

BenchRun run_primitive_bench(const std::vector<TrialSpec>& schedule, const OutcomeProfile& profile,
                             std::uint64_t seed) {
  BenchRun run;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    Rng rng(derive_seed(seed, i));
    const TrialSpec& spec = schedule[i];
    const OutcomeLevel level = sample_outcome(spec.primitive, profile, rng);
    // The scene must admit the nominal effect; throws otherwise.
    execute_atom(scene_table(spec), spec.primitive, level);
    run.log.push_back(TrialOutcome{static_cast<int>(i), spec.primitive, level});
  }
  run.report = aggregate_outcomes(run.log);
  return run;
}

// ---- counters --------------------------------------------------------------

namespace {

struct RunTracker {
  std::string best;
  int best_len = 0;
  std::string cur;
  int cur_inst = 0;
  int cur_len = 0;

  void feed(const std::string& owner, int inst) {
    if (owner.empty()) {
      cur.clear();
      cur_len = 0;
      return;
    }
    if (owner == cur && inst == cur_inst) {
      ++cur_len;
    } else {
      cur = owner;
      cur_inst = inst;
      cur_len = 1;
    }
    if (cur_len > best_len) {  // strict: earliest run wins ties
      best = cur;
      best_len = cur_len;
    }
  }
};

}  // namespace

CounterReport compute_counters(const std::vector<TrajectoryEvent>& events) {
  CounterReport r;
  RunTracker lap, ldp;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TrajectoryEvent& e = events[i];
    if (e.state_index != static_cast<int>(i)) {
      throw Error(Errc::non_contiguous, "expected state " + std::to_string(i) + ", got " +
                                            std::to_string(e.state_index));
    }
    ++r.states;
    if (e.agent) {
      ++r.ap;
      if (e.agent->kind == AgentKind::request_human) ++r.hl;
    }
    if (e.atom || e.atom_unresolved) ++r.dpp;
    if (e.retry) ++r.rc;
    if (e.gate == GateKind::wait) ++r.wa;
    lap.feed(e.agent_owner, e.agent_instance);
    ldp.feed(e.atom_owner, e.atom_instance);
  }
  r.lap = lap.best;
  r.ldp = ldp.best;
  return r;
}

namespace {

constexpr std::string_view kContPrefix = "cont. ";

// First robot atom of an agent primitive, when it can be known without a table.
struct FirstAtom {
  bool dispatches = false;
  std::optional<RobotPrimitive> atom;
};

FirstAtom first_atom_of(const AgentPrimitive& p) {
  switch (p.kind) {
    case AgentKind::view_card:
    case AgentKind::show_card: return {true, pick_up_for(p.side)};
    case AgentKind::put_down_card:
      return {true, p.facing == Facing::up ? show_for(p.side) : put_down_for(p.side)};
    case AgentKind::raise: {
      const ChipCount ample{1000, 1000, 1000, 1000};
      auto split = split_chips(p.amount, ample);
      if (split.empty()) return {};
      return {true, push_for(split.front())};
    }
    case AgentKind::call:
    case AgentKind::all_in:
    case AgentKind::collect_winnings: return {true, std::nullopt};
    default: return {};
  }
}

}  // namespace

void OccupancyTracker::attribute(TrajectoryEvent& e) {
  if (e.agent) {
    agent_ = to_string(*e.agent);
    agent_instance_ = ++counter_;
  }
  const bool new_atom = e.gate != GateKind::recover_retry && (e.atom || e.atom_unresolved);
  if (new_atom) {
    atom_ = e.atom ? std::string(to_string(*e.atom)) : std::string();
    atom_instance_ = ++counter_;
  } else if (e.gate != GateKind::wait && e.gate != GateKind::recover_retry) {
    atom_.clear();
  }
  if (e.gate == GateKind::terminate) agent_.clear();
  e.agent_owner = agent_;
  e.agent_instance = agent_.empty() ? 0 : agent_instance_;
  e.atom_owner = atom_;
  e.atom_instance = atom_.empty() ? 0 : atom_instance_;
  if (e.gate == GateKind::complete) agent_.clear();
}

std::vector<TrajectoryEvent> parse_labels(const std::vector<std::string>& labels) {
  std::vector<TrajectoryEvent> out;
  OccupancyTracker tracker;
  std::optional<RobotPrimitive> last_atom;
  bool any_atom = false;

  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string& label = labels[i];
    TrajectoryEvent e;
    e.state_index = static_cast<int>(i);
    e.label = label;

    if (label.rfind("wait(", 0) == 0 && label.back() == ')') {
      const std::string reason = label.substr(5, label.size() - 6);
      if (reason != "scene" && reason != "acting" && reason != "turn") {
        throw Error(Errc::unknown_label, label);
      }
      e.gate = GateKind::wait;
      e.gate_reason = reason;
    } else if (label.rfind(kContPrefix, 0) == 0) {
      auto prim = parse_robot_primitive(std::string_view(label).substr(kContPrefix.size()));
      if (!prim) throw Error(Errc::unknown_label, label);
      e.gate = GateKind::continue_atom;
      e.atom = prim;
    } else if (label == "cache hole card") {
      e.gate = GateKind::continue_atom;
    } else if (label == "verify") {
      e.gate = GateKind::verify;
    } else if (label == "complete") {
      e.gate = GateKind::complete;
    } else if (label == "retry") {
      if (!any_atom) throw Error(Errc::unknown_label, "retry without a prior atom");
      e.gate = GateKind::recover_retry;
      e.retry = true;
      e.atom = last_atom;
      e.atom_unresolved = !last_atom;
    } else if (label == "end") {
      e.gate = GateKind::terminate;
    } else {
      auto prim = parse_agent_primitive(label);
      if (!prim) throw Error(Errc::unknown_label, label);
      e.gate = prim->kind == AgentKind::request_human ? GateKind::request_human : GateKind::invoke_agent;
      e.agent = prim;
      const FirstAtom fa = first_atom_of(*prim);
      if (fa.dispatches) {
        e.atom = fa.atom;
        e.atom_unresolved = !fa.atom;
      }
    }
    if (e.gate != GateKind::recover_retry && (e.atom || e.atom_unresolved)) {
      last_atom = e.atom;
      any_atom = true;
    }
    tracker.attribute(e);
    out.push_back(std::move(e));
  }
  return out;
}

CounterReport replay_labels(const std::vector<std::string>& labels) {
  return compute_counters(parse_labels(labels));
}

LabelFile read_label_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::malformed_document, "cannot read " + path);
  LabelFile f;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream words(line.substr(1));
      std::string w;
      words >> w;
      if (w != "expect") continue;
      while (words >> w) {
        const auto eq = w.find('=');
        if (eq == std::string::npos) throw Error(Errc::malformed_document, "bad expect entry " + w);
        f.expect.emplace_back(w.substr(0, eq), w.substr(eq + 1));
      }
      continue;
    }
    f.labels.push_back(line);
  }
  return f;
}

Json encode(const TrajectoryEvent& e) {
  Json j{{"state", e.state_index}, {"gate", std::string(to_string(e.gate))}, {"reason", e.gate_reason}};
  j["agent"] = e.agent ? Json(to_string(*e.agent)) : Json(nullptr);
  j["atom"] = e.atom ? Json(std::string(to_string(*e.atom))) : Json(nullptr);
  j["atom_unresolved"] = e.atom_unresolved;
  j["retry"] = e.retry;
  j["label"] = e.label;
  j["agent_owner"] = e.agent_owner;
  j["agent_instance"] = e.agent_instance;
  j["atom_owner"] = e.atom_owner;
  j["atom_instance"] = e.atom_instance;
  return j;
}

namespace {

GateKind parse_gate_kind(const std::string& s) {
  for (GateKind k : {GateKind::wait, GateKind::verify, GateKind::complete, GateKind::continue_atom,
                     GateKind::recover_retry, GateKind::invoke_agent, GateKind::request_human,
                     GateKind::terminate}) {
    if (to_string(k) == s) return k;
  }
  throw Error(Errc::malformed_document, "unknown gate " + s);
}

}  // namespace

TrajectoryEvent decode_event(const Json& j) {
  return decoding([&] {
    if (!j.is_object()) throw Error(Errc::malformed_document, "event must be an object");
    TrajectoryEvent e;
    e.state_index = require(j, "state").get<int>();
    e.gate = parse_gate_kind(require(j, "gate").get<std::string>());
    e.gate_reason = require(j, "reason").get<std::string>();
    const Json& a = require(j, "agent");
    if (!a.is_null()) {
      e.agent = parse_agent_primitive(a.get<std::string>());
      if (!e.agent) throw Error(Errc::malformed_document, "bad agent primitive " + a.dump());
    }
    const Json& t = require(j, "atom");
    if (!t.is_null()) {
      e.atom = parse_robot_primitive(t.get<std::string>());
      if (!e.atom) throw Error(Errc::malformed_document, "bad atom " + t.dump());
    }
    e.atom_unresolved = require(j, "atom_unresolved").get<bool>();
    e.retry = require(j, "retry").get<bool>();
    e.label = require(j, "label").get<std::string>();
    e.agent_owner = require(j, "agent_owner").get<std::string>();
    e.agent_instance = require(j, "agent_instance").get<int>();
    e.atom_owner = require(j, "atom_owner").get<std::string>();
    e.atom_instance = require(j, "atom_instance").get<int>();
    return e;
  });
}

Json encode(const CounterReport& r) {
  return Json{{"States", r.states}, {"AP", r.ap}, {"DPP", r.dpp}, {"WA", r.wa},
              {"HL", r.hl},         {"RC", r.rc}, {"LAP", r.lap}, {"LDP", r.ldp}};
}

CounterReport decode_counter_report(const Json& j) {
  return decoding([&] {
    CounterReport r;
    r.states = require(j, "States").get<int>();
    r.ap = require(j, "AP").get<int>();
    r.dpp = require(j, "DPP").get<int>();
    r.wa = require(j, "WA").get<int>();
    r.hl = require(j, "HL").get<int>();
    r.rc = require(j, "RC").get<int>();
    r.lap = require(j, "LAP").get<std::string>();
    r.ldp = require(j, "LDP").get<std::string>();
    return r;
  });
}

std::string counter_field(const CounterReport& r, const std::string& key) {
  if (key == "States") return std::to_string(r.states);
  if (key == "AP") return std::to_string(r.ap);
  if (key == "DPP") return std::to_string(r.dpp);
  if (key == "WA") return std::to_string(r.wa);
  if (key == "HL") return std::to_string(r.hl);
  if (key == "RC") return std::to_string(r.rc);
  if (key == "LAP") return r.lap;
  if (key == "LDP") return r.ldp;
  throw Error(Errc::malformed_document, "unknown counter " + key);
}

}  // namespace holdem
