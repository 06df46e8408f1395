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

#include "holdem/session.hpp"

#include <algorithm>

#include "holdem/chip_split.hpp"
#include "holdem/translator.hpp"

namespace holdem {

std::string_view to_string(HumanHelp h) {
  switch (h) {
    case HumanHelp::terminate: return "terminate";
    case HumanHelp::auto_ack: return "auto_ack";
    case HumanHelp::console: return "console";
  }
  return "terminate";
}

std::string_view to_string(FailureCategory c) {
  switch (c) {
    case FailureCategory::perception: return "perception";
    case FailureCategory::routing_decision: return "routing_decision";
    case FailureCategory::policy_execution: return "policy_execution";
    case FailureCategory::verification: return "verification";
    case FailureCategory::disruptive_scene: return "disruptive_scene";
  }
  return "perception";
}

// ---- config ----------------------------------------------------------------

Json encode(const SessionConfig& c) {
  Json j;
  j["table"] = encode(c.table);
  j["seeds"] = Json{{"policy", c.seeds.policy}, {"perceiver", c.seeds.perceiver}, {"agents", c.seeds.agents}};
  j["outcome_profile"] = c.outcome_override ? encode(*c.outcome_override) : Json(c.outcome_profile);
  j["noise_profile"] = c.noise_profile;
  j["budgets"] = Json{{"wait_budget", c.budgets.wait_budget}, {"retry_budget", c.budgets.retry_budget}};
  j["robot_agent"] = encode(c.robot_agent);
  j["opponent_agent"] = encode(c.opponent_agent);
  j["max_states"] = c.max_states;
  j["opponent_delay"] = c.opponent_delay;
  j["tie_outcome"] = std::string(to_string(c.tie_outcome));
  j["human_help"] = std::string(to_string(c.human_help));
  j["carry_inventories"] = c.carry_inventories;
  return j;
}

namespace {

[[noreturn]] void unresolvable(const std::string& why) { throw Error(Errc::config_unresolvable, why); }

std::uint64_t get_seed(const Json& obj, const char* key) {
  if (!obj.contains(key)) return 0;
  const Json& v = obj[key];
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    unresolvable(std::string("seed ") + key + " must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

SessionConfig decode_session_config(const Json& j) {
  try {
    return decoding([&] {
      if (!j.is_object()) unresolvable("config must be an object");
      SessionConfig c;
      if (j.contains("table")) c.table = decode_table_config(j["table"]);
      if (j.contains("seeds")) {
        const Json& s = j["seeds"];
        if (!s.is_object()) unresolvable("seeds must be an object");
        c.seeds = {get_seed(s, "policy"), get_seed(s, "perceiver"), get_seed(s, "agents")};
      }
      if (j.contains("outcome_profile")) {
        const Json& p = j["outcome_profile"];
        if (p.is_string()) {
          c.outcome_profile = p.get<std::string>();
        } else {
          c.outcome_override = decode_outcome_profile(p);
          c.outcome_profile = c.outcome_override->name;
        }
      }
      if (j.contains("noise_profile")) c.noise_profile = j["noise_profile"].get<std::string>();
      if (j.contains("budgets")) {
        c.budgets.wait_budget = j["budgets"].value("wait_budget", c.budgets.wait_budget);
        c.budgets.retry_budget = j["budgets"].value("retry_budget", c.budgets.retry_budget);
      }
      if (j.contains("robot_agent")) c.robot_agent = decode_agent_spec(j["robot_agent"]);
      if (j.contains("opponent_agent")) c.opponent_agent = decode_agent_spec(j["opponent_agent"]);
      c.max_states = j.value("max_states", c.max_states);
      c.opponent_delay = j.value("opponent_delay", c.opponent_delay);
      if (j.contains("tie_outcome")) c.tie_outcome = parse_showdown_outcome(j["tie_outcome"].get<std::string>());
      if (j.contains("human_help")) {
        const std::string h = j["human_help"].get<std::string>();
        if (h == "terminate") {
          c.human_help = HumanHelp::terminate;
        } else if (h == "auto_ack") {
          c.human_help = HumanHelp::auto_ack;
        } else if (h == "console") {
          c.human_help = HumanHelp::console;
        } else {
          unresolvable("unknown human_help mode " + h);
        }
      }
      c.carry_inventories = j.value("carry_inventories", false);

      if (c.max_states < 1) unresolvable("max_states must be at least 1");
      if (c.opponent_delay < 0) unresolvable("opponent_delay must be non-negative");
      if (c.budgets.wait_budget < 1 || c.budgets.retry_budget < 0) unresolvable("budgets out of range");
      if (c.tie_outcome == ShowdownOutcome::not_showdown) unresolvable("tie_outcome must be win or lose");
      if (c.robot_agent.type == AgentType::console) unresolvable("the robot seat cannot be a console");
      resolve_outcome_profile(c);
      builtin_noise_profile(c.noise_profile);
      return c;
    });
  } catch (const Error& e) {
    if (e.code() == Errc::config_unresolvable) throw;
    throw Error(Errc::config_unresolvable, e.what());
  }
}

OutcomeProfile resolve_outcome_profile(const SessionConfig& c) {
  if (c.outcome_override) return *c.outcome_override;
  return builtin_outcome_profile(c.outcome_profile);
}

// ---- records -------------------------------------------------------------

namespace {

Json corrupted_fields(const std::array<bool, 8>& corrupted) {
  Json out = Json::array();
  for (Field f : kFields) {
    if (corrupted[static_cast<std::size_t>(f)]) out.push_back(std::string(to_string(f)));
  }
  return out;
}

Json strings(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

}  // namespace

Json encode(const StateRecord& s) {
  return Json{{"state", s.index},
              {"stage", std::string(to_string(s.stage))},
              {"truth", encode(s.truth)},
              {"parsed", encode(s.parsed)},
              {"corrupted", corrupted_fields(s.corrupted)},
              {"gate", encode(s.gate)},
              {"clean_gate", s.clean_gate},
              {"steps", strings(s.steps)},
              {"atom", s.atom ? Json(std::string(to_string(*s.atom))) : Json(nullptr)},
              {"outcome", s.outcome ? Json(std::string(to_string(*s.outcome))) : Json(nullptr)},
              {"notes", strings(s.notes)}};
}

Json encode(const SessionRecord& r) {
  Json events = Json::array();
  for (const auto& e : r.events) events.push_back(encode(e));
  Json states = Json::array();
  for (const auto& s : r.states) states.push_back(encode(s));
  return Json{{"config", encode(r.config)},
              {"cause", std::string(to_string(r.cause))},
              {"result", r.result ? Json(std::string(to_string(*r.result))) : Json(nullptr)},
              {"counters", encode(r.counters)},
              {"events", events},
              {"states", states},
              {"final_truth", encode(r.final_truth)}};
}

std::map<FailureCategory, int> classify_failure(const SessionRecord& r) {
  std::map<FailureCategory, int> out;
  for (const StateRecord& s : r.states) {
    if (s.outcome == OutcomeLevel::TF) ++out[FailureCategory::policy_execution];
    if (s.outcome == OutcomeLevel::DC || s.outcome == OutcomeLevel::DF) ++out[FailureCategory::disruptive_scene];
    const bool noisy = std::any_of(s.corrupted.begin(), s.corrupted.end(), [](bool b) { return b; });
    const bool misrouted = describe(s.gate) != s.clean_gate;
    if (noisy && misrouted) {
      ++out[FailureCategory::perception];
    } else if (s.gate.kind == GateKind::verify && !s.gate.verified) {
      ++out[FailureCategory::verification];
    } else if (s.gate.kind == GateKind::request_human && s.gate.reason == "wait_budget") {
      ++out[FailureCategory::routing_decision];
    }
    for (const auto& n : s.notes) {
      if (n.rfind("routing:", 0) == 0) ++out[FailureCategory::routing_decision];
    }
  }
  return out;
}

Json encode(const std::map<FailureCategory, int>& failures) {
  Json j = Json::object();
  for (const auto& [k, v] : failures) j[std::string(to_string(k))] = v;
  return j;
}

Json public_view(const TableState& t, LoopStage stage) {
  auto shown = [](const std::optional<HoleCard>& h) {
    if (!h) return Json(nullptr);
    return h->facing == Facing::up ? encode(h->card) : Json("hidden");
  };
  return Json{{"street", std::string(to_string(t.street))},
              {"robot_blind", std::string(to_string(t.blind))},
              {"turn", t.is_robot_turn ? "robot" : "opponent"},
              {"loop_stage", std::string(to_string(stage))},
              {"community_cards", encode(t.community)},
              {"robot_hole", Json::array({shown(t.hole_left), shown(t.hole_right)})},
              {"opponent_hole", Json::array({shown(t.opponent_hole[0]), shown(t.opponent_hole[1])})},
              {"robot_inventory", encode(t.robot_inventory)},
              {"opponent_inventory", encode(t.opponent_inventory)},
              {"robot_bet_zone", encode(t.robot_bet_zone)},
              {"opponent_bet_zone", encode(t.opponent_bet_zone)},
              {"pot", pot_value(t)},
              {"result", t.betting.result ? Json(std::string(to_string(*t.betting.result))) : Json(nullptr)}};
}

// ---- session ----------------------------------------------------------------

Session::Session(SessionConfig cfg)
    : cfg_(std::move(cfg)),
      profile_(resolve_outcome_profile(cfg_)),
      noise_(builtin_noise_profile(cfg_.noise_profile)),
      totals_(cfg_.table.robot_chips + cfg_.table.opponent_chips),
      truth_(new_initial_table(cfg_.table)),
      plan_snapshot_(truth_),
      robot_(cfg_.robot_agent, derive_seed(cfg_.seeds.agents, 0)),
      opponent_(cfg_.opponent_agent, derive_seed(cfg_.seeds.agents, 1)),
      policy_rng_(cfg_.seeds.policy, 0x706f6c),
      perceiver_rng_(cfg_.seeds.perceiver, 0x706572) {
  if (cfg_.max_states < 1) throw Error(Errc::config_unresolvable, "max_states must be at least 1");
  record_.config = cfg_;
}

ShowdownOutcome Session::true_outcome() const {
  if (truth_.street != Street::settled || !truth_.betting.result) return ShowdownOutcome::not_showdown;
  switch (*truth_.betting.result) {
    case HandResult::win:
    case HandResult::opponent_folded: return ShowdownOutcome::win;
    case HandResult::lose: return ShowdownOutcome::lose;
    case HandResult::tie: return cfg_.tie_outcome;
  }
  return ShowdownOutcome::not_showdown;
}

LoopStage Session::true_stage() const {
  if (phys_.down) return LoopStage::down;
  if (phys_.acting_left > 0 || acting_now_) return LoopStage::acting;
  if (phys_.to_recover) return LoopStage::to_recover;
  if (ctx_.plan) return LoopStage::atom_idle;
  switch (true_outcome()) {
    case ShowdownOutcome::win: return LoopStage::win;
    case ShowdownOutcome::lose: return LoopStage::lose;
    case ShowdownOutcome::not_showdown: break;
  }
  return LoopStage::idle;
}

bool Session::blocked_on_opponent() const {
  if (done_ || cfg_.opponent_agent.type != AgentType::console) return false;
  if (ctx_.plan || queued_opponent_ || resign_pending_) return false;
  return !truth_.is_robot_turn && !legal_opponent_actions(truth_).empty();
}

bool Session::blocked_on_human() const {
  return !done_ && cfg_.human_help == HumanHelp::console && ctx_.awaiting_human;
}

void Session::submit_opponent_action(const AgentPrimitive& p) {
  if (done_ || truth_.is_robot_turn || queued_opponent_) throw Error(Errc::out_of_turn, "not the opponent's turn");
  const LegalSet legal = legal_opponent_actions(truth_);
  if (legal.empty()) throw Error(Errc::out_of_turn, "no betting action is open");
  if (!legal.contains(p)) throw Error(Errc::illegal_primitive, to_string(p) + " is not legal now");
  queued_opponent_ = p;
}

void Session::acknowledge_help() {
  if (!blocked_on_human()) throw Error(Errc::malformed, "no help request is pending");
  restore_after_help(pending_notes_);
}

void Session::resign() {
  if (done_) throw Error(Errc::malformed, "session already finished");
  resign_pending_ = true;
}

void Session::restore_after_help(std::vector<std::string>& notes) {
  truth_ = plan_snapshot_;
  truth_.scene_stable = true;
  phys_ = Physical{};
  ctx_.awaiting_human = false;
  ctx_.plan.reset();
  ctx_.awaiting_verify = false;
  ctx_.expect.reset();
  ctx_.verify_failures = 0;
  ctx_.retry_count = 0;
  ctx_.consecutive_waits = 0;
  notes.push_back("human ack: table restored, reset_to_init");
}

DecisionRequest Session::robot_request(const ParsedState& ps) const {
  DecisionRequest r;
  r.parsed = ps;
  r.hole = cached_;
  r.legal = ctx_.legal;
  r.street = truth_.street;
  r.pot = ps.table.my_current_bet.value() + ps.table.opponent_bet.value();
  return r;
}

DecisionRequest Session::opponent_request() const {
  DecisionRequest r;
  r.parsed.loop_stage = LoopStage::idle;
  r.parsed.blind = truth_.blind == Blind::big_blind ? Blind::small_blind : Blind::big_blind;
  r.parsed.table.is_my_turn = true;
  r.parsed.table.community_cards = truth_.community;
  r.parsed.table.my_chips = truth_.opponent_inventory;
  r.parsed.table.opponent_chips = truth_.robot_inventory;
  r.parsed.table.my_current_bet = truth_.opponent_bet_zone;
  r.parsed.table.opponent_bet = truth_.robot_bet_zone;
  for (std::size_t i = 0; i < 2; ++i) {
    if (truth_.opponent_hole[i]) r.hole[i] = truth_.opponent_hole[i]->card;
  }
  r.legal = legal_opponent_actions(truth_);
  r.street = truth_.street;
  r.pot = pot_value(truth_);
  return r;
}

void Session::opponent_turn(StateRecord& rec) {
  if (truth_.street == Street::settled || ctx_.plan || ctx_.awaiting_human) return;
  if (resign_pending_) {
    resign_pending_ = false;
    truth_.betting.folded = Seat::opponent;
    truth_ = progress(std::move(truth_));
    rec.notes.push_back("opponent: resign");
    return;
  }
  const LegalSet legal = legal_opponent_actions(truth_);
  if (truth_.is_robot_turn || legal.empty()) return;
  AgentPrimitive choice;
  if (cfg_.opponent_agent.type == AgentType::console) {
    if (!queued_opponent_) return;
    choice = *queued_opponent_;
    queued_opponent_.reset();
  } else {
    if (opponent_wait_ < cfg_.opponent_delay) {
      ++opponent_wait_;
      return;
    }
    Decision d = opponent_.decide(opponent_request());
    for (const auto& w : d.warnings) rec.notes.push_back("opponent warning: " + w);
    choice = d.primitive;
  }
  opponent_wait_ = 0;
  truth_ = progress(apply_opponent_action(std::move(truth_), choice));
  rec.notes.push_back("opponent: " + to_string(choice));
}

void Session::capture(StateRecord& rec) {
  opponent_turn(rec);
  if (!ctx_.plan) plan_snapshot_ = truth_;
  acting_now_ = phys_.acting_left > 0;
  if (acting_now_) {
    --phys_.acting_left;
  } else if (phys_.unstable_left > 0) {
    truth_.scene_stable = false;
    --phys_.unstable_left;
  } else {
    truth_.scene_stable = true;
  }
}

Session::Dispatch Session::run_atom(RobotPrimitive atom, StateRecord& rec) {
  Dispatch d;
  d.atom = atom;
  rec.atom = atom;
  const OutcomeLevel level = sample_outcome(atom, profile_, policy_rng_);
  d.outcome = level;
  rec.outcome = level;
  try {
    const TableState nominal = nominal_effect(truth_, atom);
    d.expect = Expectation{nominal.robot_inventory, nominal.robot_bet_zone, nominal.opponent_bet_zone};
    AtomResult r = execute_atom(truth_, atom, level);
    truth_ = std::move(r.truth);
    const bool disrupted = level == OutcomeLevel::DF || (level == OutcomeLevel::DC && !profile_.dc_continuable);
    phys_.down = disrupted;
    phys_.to_recover = level == OutcomeLevel::TF;
  } catch (const Error& e) {
    if (e.code() != Errc::effect_inapplicable) throw;
    // Nothing to act on: the atom runs empty and the table is unchanged.
    d.expect = Expectation{truth_.robot_inventory, truth_.robot_bet_zone, truth_.opponent_bet_zone};
    rec.notes.push_back(std::string("no effect: ") + e.what());
  }
  phys_.acting_left = profile_.acting_delay;
  phys_.unstable_left = profile_.settle_delay;
  return d;
}

Session::Dispatch Session::dispatch(AtomPlan& plan, StateRecord& rec) {
  Dispatch d;
  while (auto step = next_atom(plan)) {
    rec.steps.push_back(to_string(*step));
    switch (step->kind) {
      case StepKind::audio: break;
      case StepKind::state_transition:
        if (step->text == "terminate") d.stop = true;
        break;
      case StepKind::perceive: {
        const Side side = plan.origin.side;
        const auto& hole = truth_.hole(side);
        if (hole && hole->facing == Facing::in_hand) {
          cached_[static_cast<std::size_t>(side)] = hole->card;
          d.cached = side;
          rec.notes.push_back("cached " + std::string(side_letter(side)) + " " + to_string(hole->card));
        } else {
          rec.notes.push_back("cache miss: card not in hand");
        }
        return d;
      }
      case StepKind::robot_atom: {
        Dispatch a = run_atom(step->atom, rec);
        a.stop = d.stop;
        return a;
      }
    }
  }
  return d;
}

void Session::commit(const AgentPrimitive& p, StateRecord& rec) {
  if (truth_.is_robot_turn && truth_.street != Street::settled) {
    try {
      truth_ = commit_robot_action(std::move(truth_), p);
    } catch (const Error& e) {
      rec.notes.push_back(std::string("commit rejected: ") + e.what());
    }
  }
  truth_ = progress(std::move(truth_));
}

void Session::step() {
  if (done_) return;
  StateRecord rec;
  rec.index = states();
  rec.notes = std::move(pending_notes_);
  pending_notes_.clear();
  capture(rec);
  rec.truth = truth_;
  rec.stage = true_stage();
  const ShowdownOutcome outcome = true_outcome();

  const Perception per = perceive(truth_, rec.stage, outcome, noise_, perceiver_rng_);
  rec.parsed = per.parsed;
  rec.corrupted = per.corrupted;
  ctx_.legal = {};
  if (truth_.is_robot_turn) {
    try {
      ctx_.legal = legal_actions(truth_);
    } catch (const Error&) {
    }
  }
  const Gate gate = route(per.parsed, ctx_, cfg_.budgets);
  rec.gate = gate;
  rec.clean_gate = describe(route(project_truth(truth_, rec.stage, outcome), ctx_, cfg_.budgets));

  TrajectoryEvent ev;
  ev.state_index = rec.index;
  ev.gate = gate.kind;
  ev.label = describe(gate);
  switch (gate.kind) {
    case GateKind::wait: ev.gate_reason = std::string(to_string(gate.wait_reason)); break;
    case GateKind::request_human: ev.gate_reason = gate.reason; break;
    case GateKind::terminate: ev.gate_reason = std::string(to_string(gate.cause)); break;
    case GateKind::invoke_agent: ev.gate_reason = gate.forced ? "forced" : ""; break;
    default: break;
  }

  GateEvent gev;
  std::optional<AgentPrimitive> chosen;
  bool stop = false;
  auto take = [&](const Dispatch& d) {
    gev.dispatched = d.atom;
    gev.expect = d.expect;
    gev.cached_side = d.cached;
    gev.cached_card = d.cached.has_value();
    ev.atom = d.atom;
    stop = d.stop;
  };

  switch (gate.kind) {
    case GateKind::wait:
    case GateKind::verify:
      break;
    case GateKind::complete:
      commit(ctx_.plan->origin, rec);
      break;
    case GateKind::continue_atom: {
      AtomPlan plan = *ctx_.plan;
      take(dispatch(plan, rec));
      gev.plan = plan;
      break;
    }
    case GateKind::recover_retry: {
      phys_.to_recover = false;
      rec.steps.push_back("robot:" + std::string(to_string(*ctx_.last_atom)));
      take(run_atom(*ctx_.last_atom, rec));
      ev.retry = true;
      break;
    }
    case GateKind::invoke_agent: {
      AgentPrimitive p;
      if (gate.forced) {
        p = gate.legal.actions.front();
      } else {
        Decision d = robot_.decide(robot_request(per.parsed));
        for (const auto& w : d.warnings) rec.notes.push_back("routing: " + w);
        if (d.fallback) rec.notes.push_back("fallback: " + std::string(to_string(*d.fallback)));
        p = d.primitive;
      }
      chosen = p;
      ev.agent = p;
      AtomPlan plan = translate(p, truth_);
      take(dispatch(plan, rec));
      gev.plan = plan;
      break;
    }
    case GateKind::request_human:
      ev.agent = AgentPrimitive::help(gate.reason);
      rec.steps.push_back("audio:" + gate.reason);
      rec.steps.push_back("transition:down");
      break;
    case GateKind::terminate:
      break;
  }

  ctx_ = apply_gate(std::move(ctx_), gate, gev);

  bool help_requested = gate.kind == GateKind::request_human;
  if (chosen) {
    if (chosen->kind == AgentKind::request_human) {
      ctx_.plan.reset();
      ctx_.awaiting_human = true;
      ctx_.pending_cause = TerminationCause::human_requested;
      help_requested = true;
    } else if (stop) {
      ctx_.plan.reset();
      ctx_.terminal = true;
      ctx_.cause = truth_.street == Street::settled ? TerminationCause::terminal_outcome
                                                    : TerminationCause::human_requested;
    } else if (!ctx_.plan) {
      commit(*chosen, rec);  // no robot atoms: done within this state
    }
  }
  if (help_requested && cfg_.human_help == HumanHelp::auto_ack) restore_after_help(rec.notes);

  if (gate.kind == GateKind::terminate) {
    done_ = true;
    record_.cause = gate.cause;
  }
  tracker_.attribute(ev);
  record_.events.push_back(std::move(ev));
  record_.states.push_back(std::move(rec));
  if (!done_ && states() >= cfg_.max_states) {
    done_ = true;
    record_.cause = TerminationCause::state_limit;
  }
}

void Session::run() {
  while (!done_ && !blocked()) step();
}

SessionRecord Session::finish() const {
  SessionRecord r = record_;
  r.final_truth = truth_;
  r.counters = compute_counters(r.events);
  r.result = truth_.betting.result;
  return r;
}

SessionRecord run_hand(const SessionConfig& cfg) {
  SessionConfig headless = cfg;
  if (headless.opponent_agent.type == AgentType::console) headless.opponent_agent = AgentSpec::heuristic();
  if (headless.human_help == HumanHelp::console) headless.human_help = HumanHelp::terminate;
  Session s(headless);
  s.run();
  return s.finish();
}

std::vector<SessionRecord> run_match(const SessionConfig& cfg, int hands) {
  std::vector<SessionRecord> out;
  SessionConfig c = cfg;
  for (int h = 0; h < hands; ++h) {
    if (h > 0) {
      c.table.deck_seed = derive_seed(cfg.table.deck_seed, static_cast<std::uint64_t>(h));
      c.seeds.policy = derive_seed(cfg.seeds.policy, static_cast<std::uint64_t>(h));
      c.seeds.perceiver = derive_seed(cfg.seeds.perceiver, static_cast<std::uint64_t>(h));
      c.seeds.agents = derive_seed(cfg.seeds.agents, static_cast<std::uint64_t>(h));
      if (cfg.carry_inventories) {
        const TableState& last = out.back().final_truth;
        if (out.back().cause != TerminationCause::terminal_outcome) break;
        c.table.robot_chips = last.robot_inventory + last.robot_bet_zone;
        c.table.opponent_chips = last.opponent_inventory + last.opponent_bet_zone;
        if (c.table.robot_chips.empty() || c.table.opponent_chips.empty()) break;
      }
    }
    out.push_back(run_hand(c));
  }
  return out;
}

}  // namespace holdem
