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

#include <gtest/gtest.h>

#include <thread>

#include "holdem/agents.hpp"
#include "holdem/errors.hpp"
#include "holdem/net.hpp"
#include "holdem/perceiver_sim.hpp"

using namespace holdem;

namespace {

AgentPrimitive prim(const char* text) { return *parse_agent_primitive(text); }

DecisionRequest betting_request(bool facing_bet) {
  DecisionRequest r;
  r.legal.actions = facing_bet ? std::vector<AgentPrimitive>{prim("fold"), prim("call"), prim("all_in")}
                               : std::vector<AgentPrimitive>{prim("check"), prim("all_in")};
  r.legal.raise_targets = {20, 30, 40, 100};
  r.pot = 30;
  return r;
}

}  // namespace

TEST(Scripted, ConsumesInOrderAndSkipsIllegal) {
  Agent a(AgentSpec::scripted({prim("raise(15)"), prim("check"), prim("call")}));
  const Decision d1 = a.decide(betting_request(false));
  EXPECT_EQ(d1.primitive, prim("check"));
  EXPECT_EQ(d1.warnings.size(), 1u);
  const Decision d2 = a.decide(betting_request(true));
  EXPECT_EQ(d2.primitive, prim("call"));
  const Decision d3 = a.decide(betting_request(true));
  EXPECT_EQ(d3.primitive, prim("fold"));
  EXPECT_EQ(d3.fallback, Errc::script_exhausted);
}

TEST(Scripted, ExhaustionWithoutFoldTakesFirstLegal) {
  LegalSet l;
  l.actions = {prim("check"), prim("all_in")};
  EXPECT_EQ(exhaustion_choice(l), prim("check"));
}

TEST(Heuristic, ThresholdsOrderTheChoice) {
  const HeuristicThresholds t;
  EXPECT_EQ(heuristic_choice(betting_request(true), 0.1, t), prim("fold"));
  EXPECT_EQ(heuristic_choice(betting_request(true), 0.5, t), prim("call"));
  EXPECT_EQ(heuristic_choice(betting_request(false), 0.5, t), prim("check"));
  EXPECT_EQ(heuristic_choice(betting_request(false), 0.8, t), prim("raise(30)"));
  EXPECT_EQ(heuristic_choice(betting_request(true), 1.0, t), prim("all_in"));
}

TEST(Heuristic, NeverFoldsTheNuts) {
  Agent a(AgentSpec::heuristic(), 1);
  DecisionRequest r = betting_request(true);
  r.hole = {parse_card("As"), parse_card("Ks")};
  r.parsed.table.community_cards = {parse_card("Qs"), parse_card("Js"), parse_card("Ts"), parse_card("2d"),
                                    parse_card("3c")};
  const AgentPrimitive p = a.decide(r).primitive;
  EXPECT_TRUE(p.kind == AgentKind::all_in || p.kind == AgentKind::raise) << to_string(p);
}

TEST(Heuristic, PostsAnOwedBlind) {
  DecisionRequest r;
  r.legal.actions = {prim("view_card(L)"), prim("view_card(R)")};
  r.legal.raise_targets = {5};
  r.hole = {parse_card("2c"), parse_card("7d")};
  EXPECT_EQ(heuristic_choice(r, 0.1, HeuristicThresholds{}), prim("raise(5)"));
}

TEST(Heuristic, ViewsOnlyUnknownCards) {
  DecisionRequest r;
  r.legal.actions = {prim("view_card(L)"), prim("view_card(R)"), prim("check")};
  EXPECT_EQ(heuristic_choice(r, 0.5, HeuristicThresholds{}), prim("view_card(L)"));
  r.hole[0] = parse_card("Ah");
  EXPECT_EQ(heuristic_choice(r, 0.5, HeuristicThresholds{}), prim("view_card(R)"));
  r.hole[1] = parse_card("Ad");
  EXPECT_EQ(heuristic_choice(r, 0.5, HeuristicThresholds{}), prim("check"));
}

TEST(Agents, AlwaysReturnALegalMember) {
  Rng rng(3);
  Agent h(AgentSpec::heuristic({0.3, 0.7, 0.95, 200}), 2);
  Agent s(AgentSpec::scripted({prim("raise(50)"), prim("check"), prim("fold")}));
  for (int i = 0; i < 200; ++i) {
    DecisionRequest r = betting_request(rng.coin());
    if (rng.coin()) r.legal.raise_targets.clear();
    auto deck = full_deck();
    for (int k = 0; k < 2; ++k) std::swap(deck[k], deck[k + rng.below(deck.size() - k)]);
    r.hole = {deck[0], deck[1]};
    EXPECT_TRUE(r.legal.contains(h.decide(r).primitive));
    EXPECT_TRUE(r.legal.contains(s.decide(r).primitive));
  }
  EXPECT_THROW(h.decide(DecisionRequest{}), Error);
}

TEST(Agents, SpecAndRequestRoundTrip) {
  for (const AgentSpec& spec : {AgentSpec::scripted({prim("check"), prim("raise(10)")}), AgentSpec::heuristic()}) {
    EXPECT_EQ(decode_agent_spec(parse_json(dump(encode(spec)))), spec);
  }
  AgentSpec ext;
  ext.type = AgentType::external;
  ext.endpoint = "127.0.0.1:9";
  ext.timeout_ms = 50;
  EXPECT_EQ(decode_agent_spec(encode(ext)), ext);
  EXPECT_THROW(decode_agent_spec(parse_json(R"({"kind":"oracle"})")), Error);

  DecisionRequest r = betting_request(true);
  r.hole[1] = parse_card("9c");
  r.street = Street::turn;
  const DecisionRequest back = decode_decision_request(parse_json(dump(encode(r))));
  EXPECT_EQ(back.legal, r.legal);
  EXPECT_EQ(back.hole, r.hole);
  EXPECT_EQ(back.pot, r.pot);
  EXPECT_EQ(back.street, r.street);
}

TEST(External, UnreachableEndpointRequestsHelp) {
  AgentSpec spec;
  spec.type = AgentType::external;
  spec.endpoint = "127.0.0.1:1";
  spec.timeout_ms = 200;
  Agent a(spec);
  const Decision d = a.decide(betting_request(false));
  EXPECT_EQ(d.primitive.kind, AgentKind::request_human);
  EXPECT_EQ(d.fallback, Errc::external_timeout);
}

TEST(External, RepliesAreRelayed) {
  LineServer* self = nullptr;
  std::string seen_type;
  LineServer server(
      [&](std::uint64_t conn, const std::string& line) {
        const Json msg = parse_json(line);
        seen_type = msg["type"].get<std::string>();
        self->send(conn, dump(Json{{"type", "decision_reply"},
                                   {"session_id", ""},
                                   {"seq", msg["seq"]},
                                   {"primitive", "call"}}));
      },
      [](std::uint64_t) {});
  self = &server;
  const auto port = server.start(parse_endpoint("127.0.0.1:0"));
  AgentSpec spec;
  spec.type = AgentType::external;
  spec.endpoint = "127.0.0.1:" + std::to_string(port);
  spec.timeout_ms = 2000;
  Agent a(spec);
  const Decision d = a.decide(betting_request(true));
  EXPECT_EQ(d.primitive, prim("call"));
  EXPECT_FALSE(d.fallback);
  EXPECT_EQ(seen_type, "decision_request");
  server.stop();
}

TEST(Endpoint, Parses) {
  EXPECT_EQ(parse_endpoint(":8080").port, 8080);
  EXPECT_EQ(parse_endpoint("localhost:1").host, "localhost");
  EXPECT_THROW(parse_endpoint("nonsense"), Error);
  EXPECT_THROW(parse_endpoint("h:99999"), Error);
}
