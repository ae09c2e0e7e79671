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

#include "ppgrt/protocol.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

#include "ppgrt/serialization.hpp"

namespace ppgrt::net {

namespace {

bool SendAll(int fd, std::string_view bytes) {
  while (!bytes.empty()) {
    ssize_t sent = ::send(fd, bytes.data(), bytes.size(), MSG_NOSIGNAL);
    if (sent < 0 && errno == EINTR) continue;
    if (sent <= 0) return false;
    bytes.remove_prefix(static_cast<std::size_t>(sent));
  }
  return true;
}

enum class ReadStatus { kOk, kEof, kTruncated, kTooLarge, kBadType, kError };

// Reads exactly `count` bytes. kEof only when nothing was read.
ReadStatus ReadExact(int fd, char* out, std::size_t count) {
  std::size_t got = 0;
  while (got < count) {
    ssize_t n = ::recv(fd, out + got, count - got, 0);
    if (n < 0 && errno == EINTR) continue;
    if (n < 0) return ReadStatus::kError;
    if (n == 0) return got == 0 ? ReadStatus::kEof : ReadStatus::kTruncated;
    got += static_cast<std::size_t>(n);
  }
  return ReadStatus::kOk;
}

ReadStatus ReadFrame(int fd, std::size_t max_payload, Frame& frame) {
  char header[kFrameHeaderBytes];
  ReadStatus status = ReadExact(fd, header, sizeof(header));
  if (status != ReadStatus::kOk) return status;
  std::uint32_t length = 0;
  for (int i = 0; i < 4; ++i) {
    length = (length << 8) | static_cast<std::uint8_t>(header[i]);
  }
  const auto type = static_cast<std::uint8_t>(header[4]);
  if (type < 0x01 || type > 0x03) return ReadStatus::kBadType;
  if (length > max_payload) return ReadStatus::kTooLarge;
  frame.type = static_cast<MessageType>(type);
  frame.payload.assign(length, '\0');
  if (length == 0) return ReadStatus::kOk;
  status = ReadExact(fd, frame.payload.data(), length);
  return status == ReadStatus::kEof ? ReadStatus::kTruncated : status;
}

Frame ErrorFrame(std::string_view code, std::string_view message) {
  return Frame{MessageType::kError,
               "ERROR:" + std::string(code) + " " + std::string(message)};
}

class Socket {
 public:
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket() {
    if (fd_ >= 0) ::close(fd_);
  }
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  int get() const { return fd_; }

 private:
  int fd_;
};

int Connect(const std::string& host, std::uint16_t port) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* found = nullptr;
  const std::string service = std::to_string(port);
  if (::getaddrinfo(host.c_str(), service.c_str(), &hints, &found) != 0) {
    throw IoError("cannot resolve " + host);
  }
  int fd = -1;
  for (addrinfo* ai = found; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(found);
  if (fd < 0) {
    throw IoError("cannot connect to " + host + ":" + service);
  }
  return fd;
}

Frame ReadReply(int fd, std::size_t max_frame_bytes) {
  Frame reply;
  switch (ReadFrame(fd, max_frame_bytes, reply)) {
    case ReadStatus::kOk:
      return reply;
    case ReadStatus::kTooLarge:
      throw IoError("reply frame exceeds the size cap");
    case ReadStatus::kBadType:
      throw IoError("reply frame has an unknown message type");
    default:
      throw IoError("connection closed before a complete reply");
  }
}

}  // namespace

std::string EncodeFrame(const Frame& frame) {
  if (frame.payload.size() > 0xFFFFFFFFu) {
    throw UsageError("frame payload too large");
  }
  const auto length = static_cast<std::uint32_t>(frame.payload.size());
  std::string out;
  out.reserve(kFrameHeaderBytes + frame.payload.size());
  for (int i = 0; i < 4; ++i) {
    out += static_cast<char>((length >> (24 - 8 * i)) & 0xFF);
  }
  out += static_cast<char>(frame.type);
  out += frame.payload;
  return out;
}

DecodedFrame DecodeFrame(std::string_view bytes, std::size_t max_payload) {
  DecodedFrame out;
  if (bytes.size() < kFrameHeaderBytes) return out;
  std::uint32_t length = 0;
  for (int i = 0; i < 4; ++i) {
    length = (length << 8) | static_cast<std::uint8_t>(bytes[i]);
  }
  const auto type = static_cast<std::uint8_t>(bytes[4]);
  if (type < 0x01 || type > 0x03) {
    out.status = FrameStatus::kBadType;
    return out;
  }
  if (length > max_payload) {
    out.status = FrameStatus::kTooLarge;
    return out;
  }
  if (bytes.size() < kFrameHeaderBytes + length) return out;
  out.status = FrameStatus::kComplete;
  out.frame.type = static_cast<MessageType>(type);
  out.frame.payload = std::string(bytes.substr(kFrameHeaderBytes, length));
  out.consumed = kFrameHeaderBytes + length;
  return out;
}

std::string EncodeRequest(const Request& request) {
  return "algo=" + std::string(AlgorithmName(request.algorithm)) + "\n" +
         request.query_text;
}

Request DecodeRequest(std::string_view payload) {
  constexpr std::string_view kPrefix = "algo=";
  std::size_t eol = payload.find('\n');
  if (!payload.starts_with(kPrefix) || eol == std::string_view::npos) {
    throw FormatError("request must start with an algo= line");
  }
  Request request;
  try {
    request.algorithm =
        ParseAlgorithm(payload.substr(kPrefix.size(), eol - kPrefix.size()));
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  request.query_text = std::string(payload.substr(eol + 1));
  return request;
}

SpuServer::SpuServer(SpuKey spk, Edb edb, ServerOptions options)
    : spk_(std::move(spk)), edb_(std::move(edb)), options_(std::move(options)) {}

SpuServer::~SpuServer() { Stop(); }

std::string SpuServer::Handle(const Request& request) const {
  EncryptedQuery query = io::ParseQuery(request.query_text);
  return io::SerializeResults(
      TestAll(spk_, edb_, query, request.algorithm, options_.workers));
}

void SpuServer::Start() {
  if (running_) return;
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  hints.ai_flags = AI_PASSIVE;
  addrinfo* found = nullptr;
  const std::string service = std::to_string(options_.port);
  if (::getaddrinfo(options_.host.c_str(), service.c_str(), &hints, &found) !=
      0) {
    throw IoError("cannot resolve " + options_.host);
  }
  int fd = -1;
  for (addrinfo* ai = found; ai != nullptr; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 64) == 0) {
      break;
    }
    ::close(fd);
    fd = -1;
  }
  ::freeaddrinfo(found);
  if (fd < 0) {
    throw IoError("cannot listen on " + options_.host + ":" + service + ": " +
                  std::strerror(errno));
  }
  sockaddr_storage addr{};
  socklen_t len = sizeof(addr);
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  if (addr.ss_family == AF_INET6) {
    bound_port_ = ntohs(reinterpret_cast<sockaddr_in6*>(&addr)->sin6_port);
  } else {
    bound_port_ = ntohs(reinterpret_cast<sockaddr_in*>(&addr)->sin_port);
  }
  listen_fd_ = fd;
  running_ = true;
  accept_thread_ = std::thread([this] { AcceptLoop(); });
}

void SpuServer::AcceptLoop() {
  while (running_) {
    int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) {
      if (errno == EINTR) continue;
      if (!running_) break;
      continue;
    }
    std::lock_guard lock(mu_);
    if (!running_) {
      ::close(fd);
      break;
    }
    open_fds_.push_back(fd);
    connections_.emplace_back([this, fd] { Serve(fd); });
  }
}

void SpuServer::Serve(int fd) {
  for (;;) {
    Frame request;
    ReadStatus status = ReadFrame(fd, options_.max_frame_bytes, request);
    if (status == ReadStatus::kEof || status == ReadStatus::kError) break;
    std::optional<Frame> reply;
    bool keep_open = false;
    switch (status) {
      case ReadStatus::kTruncated:
        reply = ErrorFrame("truncated_frame", "connection closed mid-frame");
        break;
      case ReadStatus::kTooLarge:
        reply = ErrorFrame("frame_too_large",
                           "payload exceeds " +
                               std::to_string(options_.max_frame_bytes) +
                               " bytes");
        break;
      case ReadStatus::kBadType:
        reply = ErrorFrame("bad_type", "unknown message type");
        break;
      default:
        if (request.type != MessageType::kRequest) {
          reply = ErrorFrame("unexpected_type", "expected a request frame");
          break;
        }
        try {
          reply = Frame{MessageType::kResponse,
                        Handle(DecodeRequest(request.payload))};
          keep_open = true;
        } catch (const Error& e) {
          reply = ErrorFrame("bad_request", e.what());
        }
    }
    if (!SendAll(fd, EncodeFrame(*reply)) || !keep_open) break;
  }
  ::shutdown(fd, SHUT_RDWR);
  std::lock_guard lock(mu_);
  auto it = std::find(open_fds_.begin(), open_fds_.end(), fd);
  if (it != open_fds_.end()) {
    open_fds_.erase(it);
    ::close(fd);
  }
}

void SpuServer::Stop() {
  if (!running_.exchange(false)) return;
  ::shutdown(listen_fd_, SHUT_RDWR);
  ::close(listen_fd_);
  if (accept_thread_.joinable()) accept_thread_.join();
  std::vector<std::thread> connections;
  {
    std::lock_guard lock(mu_);
    for (int fd : open_fds_) ::shutdown(fd, SHUT_RDWR);
    connections.swap(connections_);
  }
  for (auto& t : connections) t.join();
  listen_fd_ = -1;
}

void SpuServer::Wait() {
  while (running_) std::this_thread::sleep_for(std::chrono::milliseconds(100));
}

std::string SendQuery(const std::string& host, std::uint16_t port,
                      Algorithm algorithm, const std::string& query_text,
                      std::size_t max_frame_bytes) {
  Frame request{MessageType::kRequest,
                EncodeRequest(Request{algorithm, query_text})};
  Frame reply = ExchangeRaw(host, port, EncodeFrame(request), false,
                            max_frame_bytes);
  if (reply.type == MessageType::kError) {
    std::string_view payload = reply.payload;
    if (payload.starts_with("ERROR:")) payload.remove_prefix(6);
    std::size_t space = payload.find(' ');
    throw RemoteError(std::string(payload.substr(0, space)),
                      space == std::string_view::npos
                          ? std::string()
                          : std::string(payload.substr(space + 1)));
  }
  if (reply.type != MessageType::kResponse) {
    throw IoError("unexpected reply frame type");
  }
  return reply.payload;
}

Frame ExchangeRaw(const std::string& host, std::uint16_t port,
                  std::string_view bytes, bool half_close,
                  std::size_t max_frame_bytes) {
  Socket socket(Connect(host, port));
  if (!SendAll(socket.get(), bytes)) throw IoError("send failed");
  if (half_close) ::shutdown(socket.get(), SHUT_WR);
  return ReadReply(socket.get(), max_frame_bytes);
}

}  // namespace ppgrt::net
