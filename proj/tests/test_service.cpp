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

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "holdem/errors.hpp"
#include "holdem/service.hpp"

using namespace holdem;
namespace fs = std::filesystem;

namespace {

SessionConfig console_config() {
  SessionConfig c;
  c.opponent_agent.type = AgentType::console;
  c.human_help = HumanHelp::console;
  return c;
}

Json msg(const std::string& type, const std::string& id, std::uint64_t seq) {
  return Json{{"type", type}, {"session_id", id}, {"seq", seq}};
}

std::vector<Json> to_conn(const std::vector<Outgoing>& out, std::uint64_t conn) {
  std::vector<Json> docs;
  for (const auto& o : out) {
    if (o.conn == conn) docs.push_back(parse_json(o.line));
  }
  return docs;
}

std::string join(Service& svc, std::uint64_t conn, std::vector<Json>& seen, const Json& config = nullptr) {
  Json m = msg("join", "", 1);
  if (!config.is_null()) m["config"] = config;
  const auto docs = to_conn(svc.handle_message(conn, dump(m)), conn);
  seen.insert(seen.end(), docs.begin(), docs.end());
  return docs.front()["session_id"].get<std::string>();
}

}  // namespace

TEST(Service, JoinSendsAPublicSnapshot) {
  Service svc({console_config(), std::nullopt});
  std::vector<Json> seen;
  const std::string id = join(svc, 1, seen);
  ASSERT_FALSE(seen.empty());
  EXPECT_EQ(seen[0]["type"], "state_update");
  EXPECT_EQ(seen[0]["snapshot"], true);
  EXPECT_EQ(seen[0]["view"]["robot_hole"][0], "hidden");
  EXPECT_EQ(seen[0]["view"]["robot_hole"][1], "hidden");
  EXPECT_TRUE(seen[0]["your_hole"][0].is_string());
  EXPECT_EQ(id, "s1");
}

TEST(Service, ErrorsCarryCodesAndEchoSeq) {
  Service svc({console_config(), std::nullopt});
  auto err = [&](const std::string& line) {
    const auto out = svc.handle_message(9, line);
    EXPECT_EQ(out.size(), 1u);
    return parse_json(out.front().line);
  };
  EXPECT_EQ(err("{oops")["code"], "Malformed");
  EXPECT_EQ(err(R"({"type":"join"})")["code"], "Malformed");
  Json unknown = err(dump(msg("human_help_ack", "zz", 41)));
  EXPECT_EQ(unknown["code"], "UnknownSession");
  EXPECT_EQ(unknown["seq"], 41);
  EXPECT_EQ(err(dump(msg("subscribe", "zz", 1)))["code"], "UnknownSession");

  std::vector<Json> seen;
  const std::string id = join(svc, 1, seen);
  Json odd = msg("dance", id, 2);
  EXPECT_EQ(err(dump(odd))["code"], "Malformed");
  Json bad = msg("opponent_action", id, 3);
  bad["primitive"] = "raise(x)";
  EXPECT_EQ(err(dump(bad))["code"], "Malformed");
  EXPECT_EQ(err(dump(msg("human_help_ack", id, 4)))["code"], "Malformed");
}

TEST(Service, OpponentActionOffTurnIsRejected) {
  SessionConfig c = console_config();
  c.outcome_override = OutcomeProfile::uniform("df", {0, 0, 0, 1});
  Service svc({c, std::nullopt});
  std::vector<Json> seen;
  const std::string id = join(svc, 1, seen);
  // Drive the hand until the session waits on a human; the console is then off turn.
  std::uint64_t seq = 1;
  for (int guard = 0; guard < 50 && seen.back()["type"] != "human_help"; ++guard) {
    ASSERT_EQ(seen.back()["awaiting"], "opponent") << dump(seen.back());
    Json a = msg("opponent_action", id, ++seq);
    a["primitive"] = seen.back()["opponent_legal"].front();
    const auto mine = to_conn(svc.handle_message(1, dump(a)), 1);
    ASSERT_FALSE(mine.empty());
    seen.insert(seen.end(), mine.begin(), mine.end());
  }
  ASSERT_EQ(seen.back()["type"], "human_help");
  Json again = msg("opponent_action", id, ++seq);
  again["primitive"] = "fold";
  const auto out = svc.handle_message(1, dump(again));
  ASSERT_EQ(out.size(), 1u);
  const Json e = parse_json(out[0].line);
  EXPECT_EQ(e["code"], "OutOfTurn");
  EXPECT_EQ(e["seq"], seq);
}

TEST(Service, ConsoleHandRunsToTheEndWithGaplessSeq) {
  const fs::path logs = fs::temp_directory_path() / "holdem_service_logs";
  fs::remove_all(logs);
  Service svc({console_config(), logs});
  std::vector<Json> seen;
  const std::string id = join(svc, 1, seen);
  std::vector<Json> watcher = to_conn(svc.handle_message(2, dump(msg("subscribe", id, 1))), 2);
  std::uint64_t seq = 10;
  for (int guard = 0; guard < 200 && !seen.back()["done"].get<bool>(); ++guard) {
    const Json& last = seen.back();
    std::vector<Outgoing> out;
    if (last["type"] == "human_help") {
      out = svc.handle_message(1, dump(msg("human_help_ack", id, ++seq)));
    } else {
      ASSERT_EQ(last["awaiting"], "opponent") << dump(last);
      Json a = msg("opponent_action", id, ++seq);
      const Json& legal = last["opponent_legal"];
      std::string pick = legal.front();
      for (const auto& l : legal) {
        if (l == "call" || l == "check") pick = l;
      }
      a["primitive"] = pick;
      out = svc.handle_message(1, dump(a));
    }
    const auto mine = to_conn(out, 1);
    ASSERT_FALSE(mine.empty());
    seen.insert(seen.end(), mine.begin(), mine.end());
    const auto theirs = to_conn(out, 2);
    watcher.insert(watcher.end(), theirs.begin(), theirs.end());
  }
  ASSERT_TRUE(seen.back()["done"].get<bool>());
  for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_EQ(seen[i]["seq"], seen[i - 1]["seq"].get<std::uint64_t>() + 1);
  for (std::size_t i = 1; i < watcher.size(); ++i) {
    EXPECT_EQ(watcher[i]["seq"], watcher[i - 1]["seq"].get<std::uint64_t>() + 1);
    EXPECT_FALSE(watcher[i].contains("your_hole"));
  }

  const auto rec = svc.finished_record(id);
  ASSERT_TRUE(rec);
  // Robot hole identities stay private until shown.
  for (const auto& doc : seen) {
    if (doc["type"] != "state_update") continue;
    for (int k = 0; k < 2; ++k) {
      const Json& shown = doc["view"]["robot_hole"][k];
      if (shown != "hidden") {
        EXPECT_TRUE(doc["view"]["street"] == "showdown" || doc["view"]["street"] == "settled");
      }
    }
  }
  EXPECT_EQ(compute_counters(rec->events), rec->counters);
  ASSERT_TRUE(fs::exists(logs / (id + ".json")));
  std::ifstream in(logs / (id + ".json"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, dump(encode(*rec)));
}

TEST(Service, HelpRequestPausesUntilAck) {
  SessionConfig c = console_config();
  c.outcome_override = OutcomeProfile::uniform("df", {0, 0, 0, 1});
  Service svc({c, std::nullopt});
  std::vector<Json> seen;
  const std::string id = join(svc, 1, seen);
  ASSERT_EQ(seen.back()["type"], "human_help");
  EXPECT_EQ(seen.back()["cause"], "scene_unusable");
  const auto out = to_conn(svc.handle_message(1, dump(msg("human_help_ack", id, 2))), 1);
  ASSERT_FALSE(out.empty());
  EXPECT_EQ(out.front()["type"], "state_update");
}

TEST(Service, ResignFinishesTheSession) {
  Service svc({console_config(), std::nullopt});
  std::vector<Json> seen;
  const std::string id = join(svc, 1, seen);
  const auto out = to_conn(svc.handle_message(1, dump(msg("resign", id, 2))), 1);
  ASSERT_FALSE(out.empty());
  EXPECT_TRUE(out.back()["done"].get<bool>());
  EXPECT_EQ(out.back()["view"]["result"], "opponent_folded");
}

TEST(Service, HeadlessJoinRunsTheWholeHand) {
  Service svc({SessionConfig{}, std::nullopt});
  std::vector<Json> seen;
  join(svc, 1, seen, encode(fixtures::third_trajectory()));
  EXPECT_TRUE(seen.back()["done"].get<bool>());
  EXPECT_EQ(seen.back()["cause"], "terminal_outcome");
}

TEST(Service, ServesOverTcp) {
  Service svc({console_config(), std::nullopt});
  ServiceServer server(svc);
  const auto port = server.start(parse_endpoint("127.0.0.1:0"));
  LineSocket sock = LineSocket::connect(parse_endpoint("127.0.0.1:" + std::to_string(port)), 2000);
  ASSERT_TRUE(sock.valid());
  ASSERT_TRUE(sock.send_line(dump(msg("join", "", 1))));
  const auto first = sock.read_line(2000);
  ASSERT_TRUE(first);
  const Json snap = parse_json(*first);
  EXPECT_EQ(snap["type"], "state_update");
  EXPECT_EQ(snap["snapshot"], true);
  ASSERT_TRUE(sock.send_line(dump(msg("opponent_action", "nope", 2))));
  std::optional<std::string> line;
  Json reply;
  do {
    line = sock.read_line(2000);
    ASSERT_TRUE(line);
    reply = parse_json(*line);
  } while (reply["type"] != "error");
  EXPECT_EQ(reply["code"], "UnknownSession");
  sock.close();
  server.stop();
}
