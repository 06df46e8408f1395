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

#include "holdem/service.hpp"

#include <fstream>

#include "holdem/errors.hpp"
#include "holdem/poker.hpp"

namespace holdem {

namespace {

struct Envelope {
  std::string type;
  std::string session_id;
  std::uint64_t seq = 0;
};

Envelope envelope(const Json& msg) {
  if (!msg.is_object()) throw Error(Errc::malformed, "message is not an object");
  Envelope e;
  try {
    e.type = require(msg, "type").get<std::string>();
    e.session_id = require(msg, "session_id").get<std::string>();
    e.seq = require(msg, "seq").get<std::uint64_t>();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw Error(Errc::malformed, ex.what());
  }
  return e;
}

Json legal_list(const LegalSet& legal) {
  Json out = Json::array();
  for (const auto& p : legal.enumerate()) out.push_back(to_string(p));
  return out;
}

}  // namespace

Json error_reply(const std::string& session_id, std::uint64_t seq, Errc code, const std::string& message) {
  return Json{{"type", "error"},
              {"session_id", session_id},
              {"seq", seq},
              {"code", std::string(to_string(code))},
              {"message", message}};
}

Service::Service(ServiceOptions opts) : opts_(std::move(opts)) {}

Service::Entry& Service::find(const std::string& id) {
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(Errc::unknown_session, "no session " + id);
  return it->second;
}

std::vector<std::string> Service::session_ids() const {
  std::lock_guard lock(mu_);
  std::vector<std::string> out;
  for (const auto& [id, e] : sessions_) out.push_back(id);
  return out;
}

std::optional<SessionRecord> Service::finished_record(const std::string& session_id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end() || !it->second.session->done()) return std::nullopt;
  return it->second.session->finish();
}

void Service::disconnect(std::uint64_t conn) {
  std::lock_guard lock(mu_);
  for (auto& [id, e] : sessions_) {
    e.subscribers.erase(conn);
    e.opponents.erase(conn);
  }
}

Json Service::state_update(const std::string& id, Entry& e, bool snapshot, std::uint64_t seq, bool opponent) const {
  const Session& s = *e.session;
  Json j{{"type", "state_update"}, {"session_id", id}, {"seq", seq}, {"snapshot", snapshot}};
  j["state_index"] = s.states() - 1;
  j["gate"] = s.states() > 0 ? describe(s.record().states.back().gate) : std::string();
  j["view"] = public_view(s.truth(), s.true_stage());
  if (opponent) {
    Json hole = Json::array();
    for (const auto& h : s.truth().opponent_hole) hole.push_back(h ? encode(h->card) : Json(nullptr));
    j["your_hole"] = hole;
  }
  j["awaiting"] = s.blocked_on_opponent() ? Json("opponent") : s.blocked_on_human() ? Json("human") : Json(nullptr);
  j["opponent_legal"] = s.blocked_on_opponent() ? legal_list(legal_opponent_actions(s.truth())) : Json::array();
  j["done"] = s.done();
  if (s.done()) {
    const SessionRecord rec = s.finish();
    j["cause"] = std::string(to_string(rec.cause));
    j["counters"] = encode(rec.counters);
  }
  return j;
}

void Service::broadcast(const std::string& id, Entry& e, std::vector<Outgoing>& out) {
  const std::uint64_t seq = ++e.seq;
  const std::string plain = dump(state_update(id, e, false, seq, false));
  const std::string own = dump(state_update(id, e, false, seq, true));
  for (auto conn : e.subscribers) out.push_back({conn, e.opponents.contains(conn) ? own : plain});
}

void Service::pump(const std::string& id, Entry& e, std::vector<Outgoing>& out) {
  Session& s = *e.session;
  while (!s.done() && !s.blocked()) {
    s.step();
    e.help_announced = e.help_announced && s.blocked_on_human();
    broadcast(id, e, out);
  }
  if (s.blocked_on_human() && !e.help_announced) {
    e.help_announced = true;
    const Gate& g = s.record().states.back().gate;
    const Json msg{{"type", "human_help"},
                   {"session_id", id},
                   {"seq", ++e.seq},
                   {"reason", g.reason},
                   {"cause", std::string(to_string(s.context().pending_cause))}};
    for (auto conn : e.subscribers) out.push_back({conn, dump(msg)});
  }
  if (s.done() && !e.logged && opts_.log_dir) {
    e.logged = true;
    std::filesystem::create_directories(*opts_.log_dir);
    std::ofstream(*opts_.log_dir / (id + ".json")) << dump(encode(s.finish())) << '\n';
  }
}

std::vector<Outgoing> Service::dispatch(std::uint64_t conn, const Json& msg) {
  const Envelope env = envelope(msg);
  std::vector<Outgoing> out;

  if (env.type == "join" || env.type == "subscribe") {
    std::string id = env.session_id;
    const bool exists = sessions_.contains(id);
    if (env.type == "subscribe" || (!exists && !id.empty() && !msg.contains("config"))) find(id);
    if (!exists) {
      SessionConfig cfg = msg.contains("config") ? decode_session_config(msg["config"]) : opts_.default_config;
      if (id.empty()) {
        do {
          id = "s" + std::to_string(next_session_++);
        } while (sessions_.contains(id));
      }
      Entry fresh;
      fresh.session = std::make_unique<Session>(std::move(cfg));
      sessions_.emplace(id, std::move(fresh));
    }
    Entry& e = sessions_.at(id);
    e.subscribers.insert(conn);
    const bool opponent = env.type == "join";
    if (opponent) e.opponents.insert(conn);
    out.push_back({conn, dump(state_update(id, e, true, e.seq, opponent))});
    pump(id, e, out);
    return out;
  }

  Entry& e = find(env.session_id);
  Session& s = *e.session;
  if (env.type == "opponent_action") {
    std::string text;
    try {
      text = require(msg, "primitive").get<std::string>();
    } catch (const Error&) {
      throw;
    } catch (const std::exception& ex) {
      throw Error(Errc::malformed, ex.what());
    }
    const auto p = parse_agent_primitive(text);
    if (!p) throw Error(Errc::malformed, "unparseable primitive " + text);
    s.submit_opponent_action(*p);
  } else if (env.type == "human_help_ack") {
    s.acknowledge_help();
    e.help_announced = false;
  } else if (env.type == "resign") {
    s.resign();
  } else {
    throw Error(Errc::malformed, "unknown message type " + env.type);
  }
  pump(env.session_id, e, out);
  return out;
}

std::vector<Outgoing> Service::handle_message(std::uint64_t conn, const std::string& line) {
  std::lock_guard lock(mu_);
  std::string session_id;
  std::uint64_t seq = 0;
  try {
    const Json msg = parse_json(line);
    if (msg.is_object()) {
      if (auto it = msg.find("session_id"); it != msg.end() && it->is_string()) session_id = it->get<std::string>();
      if (auto it = msg.find("seq"); it != msg.end() && it->is_number_unsigned()) seq = it->get<std::uint64_t>();
    }
    return dispatch(conn, msg);
  } catch (const Error& e) {
    // Config and document errors surface as Malformed on the wire.
    Errc code = e.code();
    if (code != Errc::unknown_session && code != Errc::out_of_turn && code != Errc::illegal_primitive) {
      code = Errc::malformed;
    }
    return {{conn, dump(error_reply(session_id, seq, code, e.what()))}};
  } catch (const std::exception& e) {
    return {{conn, dump(error_reply(session_id, seq, Errc::malformed, e.what()))}};
  }
}

ServiceServer::ServiceServer(Service& service)
    : service_(service),
      server_(
          [this](std::uint64_t conn, const std::string& line) {
            std::lock_guard lock(order_mu_);
            for (const auto& o : service_.handle_message(conn, line)) server_.send(o.conn, o.line);
          },
          [this](std::uint64_t conn) { service_.disconnect(conn); }) {}

std::uint16_t ServiceServer::start(const Endpoint& ep) { return server_.start(ep); }

}  // namespace holdem
