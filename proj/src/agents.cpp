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

#include "holdem/agents.hpp"

#include <algorithm>

#include "holdem/net.hpp"

namespace holdem {

std::string_view to_string(AgentType t) {
  switch (t) {
    case AgentType::scripted: return "scripted";
    case AgentType::heuristic: return "heuristic";
    case AgentType::external: return "external";
    case AgentType::console: return "console";
  }
  return "heuristic";
}

AgentSpec AgentSpec::scripted(std::vector<AgentPrimitive> script) {
  AgentSpec a;
  a.type = AgentType::scripted;
  a.script = std::move(script);
  return a;
}

AgentSpec AgentSpec::heuristic(HeuristicThresholds t) {
  AgentSpec a;
  a.type = AgentType::heuristic;
  a.thresholds = t;
  return a;
}

// ---- codec ---------------------------------------------------------------

Json encode(const DecisionRequest& r) {
  Json hole = Json::array();
  for (const auto& c : r.hole) hole.push_back(c ? encode(*c) : Json(nullptr));
  Json legal = Json::array();
  for (const auto& p : r.legal.enumerate()) legal.push_back(to_string(p));
  return Json{{"parsed", encode(r.parsed)},
              {"hole", hole},
              {"legal", legal},
              {"street", std::string(to_string(r.street))},
              {"pot", r.pot}};
}

DecisionRequest decode_decision_request(const Json& j) {
  return decoding([&] {
    DecisionRequest r;
    try {
      r.parsed = decode_parsed_state(require(j, "parsed"));
    } catch (const Error& e) {
      throw Error(Errc::malformed_document, e.what());
    }
    const Json& hole = require(j, "hole");
    if (!hole.is_array() || hole.size() != 2) throw Error(Errc::malformed_document, "hole must hold two entries");
    for (std::size_t i = 0; i < 2; ++i) {
      if (!hole[i].is_null()) r.hole[i] = decode_card(hole[i]);
    }
    for (const Json& s : require(j, "legal")) {
      auto p = parse_agent_primitive(s.get<std::string>());
      if (!p) throw Error(Errc::malformed_document, "bad legal entry " + s.dump());
      if (p->kind == AgentKind::raise) {
        r.legal.raise_targets.push_back(p->amount);
      } else {
        r.legal.actions.push_back(*p);
      }
    }
    try {
      r.street = parse_street(require(j, "street").get<std::string>());
    } catch (const Error& e) {
      throw Error(Errc::malformed_document, e.what());
    }
    r.pot = require(j, "pot").get<int>();
    return r;
  });
}

Json encode(const AgentSpec& a) {
  Json j{{"kind", std::string(to_string(a.type))}};
  switch (a.type) {
    case AgentType::scripted: {
      Json script = Json::array();
      for (const auto& p : a.script) script.push_back(to_string(p));
      j["script"] = script;
      break;
    }
    case AgentType::heuristic:
      j["fold_below"] = a.thresholds.fold_below;
      j["raise_from"] = a.thresholds.raise_from;
      j["all_in_from"] = a.thresholds.all_in_from;
      j["trials"] = a.thresholds.trials;
      break;
    case AgentType::external:
      j["endpoint"] = a.endpoint;
      j["timeout_ms"] = a.timeout_ms;
      break;
    case AgentType::console: break;
  }
  return j;
}

AgentSpec decode_agent_spec(const Json& j) {
  return decoding([&] {
    if (!j.is_object()) throw Error(Errc::config_unresolvable, "agent must be an object");
    const std::string kind = require(j, "kind").get<std::string>();
    AgentSpec a;
    if (kind == "scripted") {
      a.type = AgentType::scripted;
      for (const Json& s : require(j, "script")) {
        auto p = parse_agent_primitive(s.get<std::string>());
        if (!p) throw Error(Errc::config_unresolvable, "bad script entry " + s.dump());
        a.script.push_back(*p);
      }
    } else if (kind == "heuristic") {
      a.type = AgentType::heuristic;
      a.thresholds.fold_below = j.value("fold_below", a.thresholds.fold_below);
      a.thresholds.raise_from = j.value("raise_from", a.thresholds.raise_from);
      a.thresholds.all_in_from = j.value("all_in_from", a.thresholds.all_in_from);
      a.thresholds.trials = j.value("trials", a.thresholds.trials);
      if (a.thresholds.trials < 1) throw Error(Errc::config_unresolvable, "trials must be positive");
    } else if (kind == "external") {
      a.type = AgentType::external;
      a.endpoint = require(j, "endpoint").get<std::string>();
      a.timeout_ms = j.value("timeout_ms", a.timeout_ms);
      try {
        parse_endpoint(a.endpoint);
      } catch (const Error& e) {
        throw Error(Errc::config_unresolvable, e.what());
      }
    } else if (kind == "console") {
      a.type = AgentType::console;
    } else {
      throw Error(Errc::config_unresolvable, "unknown agent kind " + kind);
    }
    return a;
  });
}

// ---- hand strength --------------------------------------------------------

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Card> remaining_deck(const std::array<Card, 2>& hole, const std::vector<Card>& board) {
  if (board.size() != 0 && (board.size() < 3 || board.size() > 5)) {
    throw Error(Errc::wrong_card_count, "board must hold 0, 3, 4 or 5 cards");
  }
  std::array<bool, 52> used{};
  auto mark = [&used](Card c) {
    if (used[static_cast<std::size_t>(c.index())]) throw Error(Errc::duplicate_card, to_string(c));
    used[static_cast<std::size_t>(c.index())] = true;
  };
  mark(hole[0]);
  mark(hole[1]);
  for (Card c : board) mark(c);
  std::vector<Card> rest;
  for (int i = 0; i < 52; ++i) {
    if (!used[static_cast<std::size_t>(i)]) rest.push_back(Card::from_index(i));
  }
  return rest;
}

struct Tally {
  std::int64_t win = 0, tie = 0, lose = 0;
  void add(const HandRank& mine, const HandRank& theirs) {
    if (mine > theirs) {
      ++win;
    } else if (mine < theirs) {
      ++lose;
    } else {
      ++tie;
    }
  }
  HandOdds odds(bool exhaustive) const {
    const double n = static_cast<double>(win + tie + lose);
    return {static_cast<double>(win) / n, static_cast<double>(tie) / n, static_cast<double>(lose) / n, exhaustive};
  }
};

}  // namespace

std::int64_t enumeration_size(std::size_t board_cards) {
  const std::int64_t unseen = 50 - static_cast<std::int64_t>(board_cards);
  const std::int64_t missing = 5 - static_cast<std::int64_t>(board_cards);
  return choose(unseen, missing) * choose(unseen - missing, 2);
}

HandOdds hand_odds(const std::array<Card, 2>& hole, const std::vector<Card>& board, int trials, Rng& rng) {
  const std::vector<Card> rest = remaining_deck(hole, board);
  const std::size_t missing = 5 - board.size();
  Tally tally;
  std::array<Card, 7> mine{};
  std::array<Card, 7> theirs{};
  mine[0] = hole[0];
  mine[1] = hole[1];
  for (std::size_t i = 0; i < board.size(); ++i) mine[2 + i] = theirs[2 + i] = board[i];

  if (enumeration_size(board.size()) <= kExhaustiveLimit) {
    const std::size_t n = rest.size();
    std::vector<std::size_t> pick(missing);
    for (std::size_t i = 0; i < missing; ++i) pick[i] = i;
    std::vector<bool> taken(n);
    for (;;) {
      std::fill(taken.begin(), taken.end(), false);
      for (std::size_t i = 0; i < missing; ++i) {
        mine[2 + board.size() + i] = theirs[2 + board.size() + i] = rest[pick[i]];
        taken[pick[i]] = true;
      }
      const HandRank my_rank = evaluate_hand(mine);
      for (std::size_t a = 0; a < n; ++a) {
        if (taken[a]) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
          if (taken[b]) continue;
          theirs[0] = rest[a];
          theirs[1] = rest[b];
          tally.add(my_rank, evaluate_hand(theirs));
        }
      }
      // Next combination in lexicographic order.
      std::size_t i = missing;
      while (i > 0 && pick[i - 1] == n - missing + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < missing; ++k) pick[k] = pick[k - 1] + 1;
    }
    return tally.odds(true);
  }

  std::vector<Card> deck = rest;
  const std::size_t draw = missing + 2;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    for (std::size_t i = 0; i < draw; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(deck.size() - i));
      std::swap(deck[i], deck[j]);
    }
    for (std::size_t i = 0; i < missing; ++i) mine[2 + board.size() + i] = theirs[2 + board.size() + i] = deck[i];
    theirs[0] = deck[missing];
    theirs[1] = deck[missing + 1];
    tally.add(evaluate_hand(mine), evaluate_hand(theirs));
  }
  return tally.odds(false);
}

double hand_strength(const std::array<Card, 2>& hole, const std::vector<Card>& board, int trials, Rng& rng) {
  return hand_odds(hole, board, trials, rng).win;
}

// ---- decisions -----------------------------------------------------------

AgentPrimitive exhaustion_choice(const LegalSet& legal) {
  const auto fold = AgentPrimitive::make(AgentKind::fold);
  if (legal.contains(fold)) return fold;
  return legal.enumerate().front();
}

AgentPrimitive heuristic_choice(const DecisionRequest& req, double strength, const HeuristicThresholds& t) {
  const LegalSet& legal = req.legal;
  const auto collect = AgentPrimitive::make(AgentKind::collect_winnings);
  if (legal.contains(collect)) return collect;
  for (Side s : {Side::left, Side::right}) {
    if (legal.contains(AgentPrimitive::show(s))) return AgentPrimitive::show(s);
  }
  for (Side s : {Side::left, Side::right}) {
    if (legal.contains(AgentPrimitive::put_down(s, Facing::down))) return AgentPrimitive::put_down(s, Facing::down);
  }
  for (Side s : {Side::left, Side::right}) {
    const bool known = req.hole[static_cast<std::size_t>(s)].has_value();
    if (!known && legal.contains(AgentPrimitive::view(s))) return AgentPrimitive::view(s);
  }
  const auto all_in = AgentPrimitive::make(AgentKind::all_in);
  const auto call = AgentPrimitive::make(AgentKind::call);
  const auto check = AgentPrimitive::make(AgentKind::check);
  const auto fold = AgentPrimitive::make(AgentKind::fold);
  const bool voluntary = legal.contains(check) || legal.contains(call) || legal.contains(fold);
  // A lone raise target with no voluntary option is an owed blind.
  if (!voluntary && legal.raise_targets.size() == 1 && !legal.contains(all_in)) {
    return AgentPrimitive::raise_to(legal.raise_targets.front());
  }
  if (strength >= t.all_in_from && legal.contains(all_in)) return all_in;
  if (strength >= t.raise_from && !legal.raise_targets.empty()) {
    const int want = (req.pot + 4) / 5 * 5;
    const auto it = std::lower_bound(legal.raise_targets.begin(), legal.raise_targets.end(), want);
    return AgentPrimitive::raise_to(it == legal.raise_targets.end() ? legal.raise_targets.back() : *it);
  }
  if (legal.contains(call)) {
    if (strength < t.fold_below && legal.contains(fold)) return fold;
    return call;
  }
  if (legal.contains(check)) return check;
  if (legal.contains(all_in)) return all_in;
  return legal.enumerate().front();
}

Agent::Agent(AgentSpec spec, std::uint64_t seed) : spec_(std::move(spec)), rng_(seed, 0x6167656e74) {}

Decision Agent::decide(const DecisionRequest& req) {
  if (req.legal.empty()) throw Error(Errc::illegal_primitive, "decision requested with no legal primitive");
  switch (spec_.type) {
    case AgentType::scripted: return decide_scripted(req);
    case AgentType::external: return decide_external(req);
    case AgentType::heuristic:
    case AgentType::console: return decide_heuristic(req);
  }
  return decide_heuristic(req);
}

Decision Agent::decide_scripted(const DecisionRequest& req) {
  Decision d;
  while (cursor_ < spec_.script.size()) {
    const AgentPrimitive& p = spec_.script[cursor_++];
    if (req.legal.contains(p)) {
      d.primitive = p;
      return d;
    }
    d.warnings.push_back("skipped illegal script entry " + to_string(p));
  }
  d.primitive = exhaustion_choice(req.legal);
  d.fallback = Errc::script_exhausted;
  return d;
}

Decision Agent::decide_heuristic(const DecisionRequest& req) {
  Decision d;
  double strength = 0.5;
  bool betting = false;
  for (const auto& p : req.legal.actions) {
    betting = betting || p.kind == AgentKind::check || p.kind == AgentKind::call || p.kind == AgentKind::fold;
  }
  betting = betting || !req.legal.raise_targets.empty();
  if (betting && req.hole[0] && req.hole[1]) {
    try {
      strength = hand_strength({*req.hole[0], *req.hole[1]}, req.parsed.table.community_cards,
                               spec_.thresholds.trials, rng_);
    } catch (const Error& e) {
      d.warnings.push_back(std::string("strength unavailable: ") + e.what());
    }
  }
  d.primitive = heuristic_choice(req, strength, spec_.thresholds);
  return d;
}

Decision Agent::decide_external(const DecisionRequest& req) {
  Decision d;
  auto fail = [&d](const std::string& why) {
    d.primitive = AgentPrimitive::help("external_timeout");
    d.fallback = Errc::external_timeout;
    d.warnings.push_back(why);
    return d;
  };
  Endpoint ep;
  try {
    ep = parse_endpoint(spec_.endpoint);
  } catch (const Error& e) {
    return fail(e.what());
  }
  LineSocket sock = LineSocket::connect(ep, spec_.timeout_ms);
  if (!sock.valid()) return fail("endpoint " + spec_.endpoint + " unreachable");
  const std::uint64_t seq = ++seq_;
  Json msg{{"type", "decision_request"}, {"session_id", ""}, {"seq", seq}, {"request", encode(req)}};
  if (!sock.send_line(dump(msg))) return fail("send failed");
  auto line = sock.read_line(spec_.timeout_ms);
  if (!line) return fail("no reply within " + std::to_string(spec_.timeout_ms) + " ms");
  try {
    const Json reply = parse_json(*line);
    const std::string text = require(reply, "primitive").get<std::string>();
    auto p = parse_agent_primitive(text);
    if (!p) return fail("unparseable reply " + text);
    if (!req.legal.contains(*p) && p->kind != AgentKind::request_human) return fail("illegal reply " + text);
    d.primitive = *p;
    return d;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace holdem
