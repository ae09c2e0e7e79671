/*
 * Copyright 2026 The PPGRT Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPGRT_PROTOCOL_HPP_
#define PPGRT_PROTOCOL_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "ppgrt/edb.hpp"
#include "ppgrt/error.hpp"
#include "ppgrt/matcher.hpp"
#include "ppgrt/spu_key.hpp"

// TI <-> SPU exchange over TCP.
//
// Frame: 4-byte big-endian payload length, 1-byte message type, payload.
// The length counts payload bytes only. A request payload is the line
// `algo=<name>` followed by the query file verbatim; a response payload is
// the result file verbatim; an error payload is `ERROR:<code> <message>`.
// Any framing or request error is answered with an error frame, after which
// the server closes that connection.
namespace ppgrt::net {

enum class MessageType : std::uint8_t {
  kRequest = 0x01,
  kResponse = 0x02,
  kError = 0x03,
};

struct Frame {
  MessageType type = MessageType::kRequest;
  std::string payload;

  friend bool operator==(const Frame&, const Frame&) = default;
};

inline constexpr std::size_t kFrameHeaderBytes = 5;
inline constexpr std::size_t kDefaultMaxFrameBytes = 64u << 20;

std::string EncodeFrame(const Frame& frame);

enum class FrameStatus {
  kComplete,
  kNeedMore,   // fewer bytes than the frame declares
  kTooLarge,   // declared length above the cap
  kBadType,
};

struct DecodedFrame {
  FrameStatus status = FrameStatus::kNeedMore;
  Frame frame;
  std::size_t consumed = 0;
};

// Decodes the frame at the start of `bytes` without reading past it.
DecodedFrame DecodeFrame(std::string_view bytes,
                         std::size_t max_payload = kDefaultMaxFrameBytes);

struct Request {
  Algorithm algorithm = Algorithm::kHamming;
  std::string query_text;
};

std::string EncodeRequest(const Request& request);
// Throws FormatError.
Request DecodeRequest(std::string_view payload);

// The remote side answered with an error frame.
class RemoteError : public Error {
 public:
  RemoteError(std::string code, const std::string& message)
      : Error(ErrorKind::kIo, "server error " + code + ": " + message),
        code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  // 0 asks the kernel for a free port; see SpuServer::port().
  std::uint16_t port = 0;
  std::size_t max_frame_bytes = kDefaultMaxFrameBytes;
  // TestAll workers per request.
  std::size_t workers = 1;
};

// Serves Test requests against one immutable EDB. Each connection runs on
// its own thread with private state.
class SpuServer {
 public:
  SpuServer(SpuKey spk, Edb edb, ServerOptions options = {});
  ~SpuServer();

  SpuServer(const SpuServer&) = delete;
  SpuServer& operator=(const SpuServer&) = delete;

  // Binds and starts accepting. Throws IoError when the socket cannot be
  // bound.
  void Start();
  // Stops accepting, closes live connections and joins all threads.
  void Stop();
  // Blocks until Stop() is called from another thread.
  void Wait();

  std::uint16_t port() const { return bound_port_; }

  // Request handling without the transport; returns the response payload.
  std::string Handle(const Request& request) const;

 private:
  void AcceptLoop();
  void Serve(int fd);

  const SpuKey spk_;
  const Edb edb_;
  const ServerOptions options_;

  int listen_fd_ = -1;
  std::uint16_t bound_port_ = 0;
  std::atomic<bool> running_{false};
  std::thread accept_thread_;
  std::mutex mu_;
  std::vector<int> open_fds_;
  std::vector<std::thread> connections_;
};

// One request/response exchange on a fresh connection. Returns the result
// file text; throws RemoteError for an error frame and IoError on transport
// failure.
std::string SendQuery(const std::string& host, std::uint16_t port,
                      Algorithm algorithm, const std::string& query_text,
                      std::size_t max_frame_bytes = kDefaultMaxFrameBytes);

// Raw frame exchange over a fresh connection, for tests and tooling: writes
// `bytes` as-is, optionally half-closes, and reads one frame back.
Frame ExchangeRaw(const std::string& host, std::uint16_t port,
                  std::string_view bytes, bool half_close,
                  std::size_t max_frame_bytes = kDefaultMaxFrameBytes);

}  // namespace ppgrt::net

#endif  // PPGRT_PROTOCOL_HPP_
