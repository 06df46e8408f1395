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

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holdem/net.hpp"
#include "holdem/session.hpp"

namespace holdem {

struct Outgoing {
  std::uint64_t conn = 0;
  std::string line;  // canonical encoding, no terminator

  friend bool operator==(const Outgoing&, const Outgoing&) = default;
};

struct ServiceOptions {
  SessionConfig default_config;          // used by a join without "config"
  std::optional<std::filesystem::path> log_dir;  // finished records land here
};

/// Session registry behind the wire protocol. Every inbound line is handled
/// under one lock; the returned lines are in send order.
class Service {
 public:
  explicit Service(ServiceOptions opts);

  std::vector<Outgoing> handle_message(std::uint64_t conn, const std::string& line);
  void disconnect(std::uint64_t conn);

  /// Finalized record of a finished session.
  std::optional<SessionRecord> finished_record(const std::string& session_id) const;
  std::vector<std::string> session_ids() const;

 private:
  struct Entry {
    std::unique_ptr<Session> session;
    std::uint64_t seq = 0;
    std::set<std::uint64_t> subscribers;
    std::set<std::uint64_t> opponents;
    int announced_states = 0;
    bool help_announced = false;
    bool logged = false;
  };

  std::vector<Outgoing> dispatch(std::uint64_t conn, const Json& msg);
  Json state_update(const std::string& id, Entry& e, bool snapshot, std::uint64_t seq, bool opponent) const;
  void broadcast(const std::string& id, Entry& e, std::vector<Outgoing>& out);
  void pump(const std::string& id, Entry& e, std::vector<Outgoing>& out);
  Entry& find(const std::string& id);

  ServiceOptions opts_;
  mutable std::mutex mu_;
  std::map<std::string, Entry> sessions_;
  std::uint64_t next_session_ = 1;
};

/// Error reply document.
Json error_reply(const std::string& session_id, std::uint64_t seq, Errc code, const std::string& message);

/// Serves `service` on `ep` until stop() or process exit. Returns the port.
class ServiceServer {
 public:
  explicit ServiceServer(Service& service);
  std::uint16_t start(const Endpoint& ep);
  void stop() { server_.stop(); }
  void wait() { server_.wait(); }

 private:
  Service& service_;
  std::mutex order_mu_;  // keeps per-session seq order on the wire
  LineServer server_;
};

}  // namespace holdem
