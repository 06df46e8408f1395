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

#include <atomic>
#include <cstdint>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace holdem {

struct Endpoint {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;
};

/// "host:port" or ":port". Throws Errc::malformed.
Endpoint parse_endpoint(const std::string& text);

/// Owning newline-delimited stream over a connected TCP socket.
class LineSocket {
 public:
  LineSocket() = default;
  explicit LineSocket(int fd) : fd_(fd) {}
  LineSocket(LineSocket&& o) noexcept;
  LineSocket& operator=(LineSocket&& o) noexcept;
  LineSocket(const LineSocket&) = delete;
  LineSocket& operator=(const LineSocket&) = delete;
  ~LineSocket();

  /// Empty socket when the peer cannot be reached within timeout_ms.
  static LineSocket connect(const Endpoint& ep, int timeout_ms);

  bool valid() const { return fd_ >= 0; }
  int fd() const { return fd_; }

  /// Appends '\n'. False on a broken connection.
  bool send_line(const std::string& line);

  /// Next line without its terminator; nullopt on timeout, EOF or error.
  /// A negative timeout blocks.
  std::optional<std::string> read_line(int timeout_ms);

  void close();

 private:
  int fd_ = -1;
  std::string buffer_;
};

/// Thread-per-connection line server. The handler receives each line with
/// its connection id and returns nothing; replies go through send().
class LineServer {
 public:
  using Handler = std::function<void(std::uint64_t conn, const std::string& line)>;
  using CloseHandler = std::function<void(std::uint64_t conn)>;

  LineServer(Handler on_line, CloseHandler on_close);
  ~LineServer();

  /// Binds and starts accepting. Returns the bound port (useful with port 0).
  /// Throws Errc::malformed when the address cannot be bound.
  std::uint16_t start(const Endpoint& ep);
  void stop();

  /// Thread-safe; false if the connection is gone.
  bool send(std::uint64_t conn, const std::string& line);

  /// Blocks until stop() is called from another thread or a signal.
  void wait();

 private:
  struct Conn;
  void accept_loop();
  void serve(std::shared_ptr<Conn> c);

  Handler on_line_;
  CloseHandler on_close_;
  int listen_fd_ = -1;
  std::atomic<bool> running_{false};
  std::thread acceptor_;
  std::mutex mu_;
  std::vector<std::shared_ptr<Conn>> conns_;
  std::vector<std::thread> workers_;
  std::uint64_t next_id_ = 1;
};

}  // namespace holdem
