/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/testkit/hil.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <cstring>
#include <optional>

#include "certkit/errors.hpp"

namespace certkit {

namespace {

constexpr size_t kMaxDatagram = 65536;

class UdpSocket {
 public:
  UdpSocket() : fd_(::socket(AF_INET, SOCK_DGRAM, 0)) {
    if (fd_ < 0) fail_transport("cannot create UDP socket");
  }

  ~UdpSocket() {
    if (fd_ >= 0) ::close(fd_);
  }

  UdpSocket(const UdpSocket&) = delete;
  UdpSocket& operator=(const UdpSocket&) = delete;

  void bind_local(std::uint16_t port) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0)
      fail_transport("cannot bind UDP port " + std::to_string(port));
  }

  std::uint16_t bound_port() const {
    sockaddr_in addr{};
    socklen_t len = sizeof(addr);
    if (::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len) < 0)
      fail_transport("getsockname failed");
    return ntohs(addr.sin_port);
  }

  void connect_remote(const std::string& host, std::uint16_t port) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1)
      fail_transport("bad target address: " + host);
    if (::connect(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) < 0)
      fail_transport("cannot set UDP peer " + host + ":" +
                     std::to_string(port));
  }

  /// Waits up to timeout_ms for a datagram; returns false on timeout.
  bool wait_readable(int timeout_ms) const {
    pollfd pfd{fd_, POLLIN, 0};
    int rc = ::poll(&pfd, 1, timeout_ms);
    return rc > 0 && (pfd.revents & POLLIN);
  }

  ssize_t recv_from(std::uint8_t* buf, size_t size, sockaddr_in& peer) const {
    socklen_t len = sizeof(peer);
    return ::recvfrom(fd_, buf, size, 0, reinterpret_cast<sockaddr*>(&peer),
                      &len);
  }

  void send_to(const std::vector<std::uint8_t>& data,
               const sockaddr_in& peer) const {
    (void)::sendto(fd_, data.data(), data.size(), 0,
                   reinterpret_cast<const sockaddr*>(&peer), sizeof(peer));
  }

  void send(const std::vector<std::uint8_t>& data) const {
    if (::send(fd_, data.data(), data.size(), 0) < 0)
      fail_transport("UDP send failed");
  }

  ssize_t recv(std::uint8_t* buf, size_t size) const {
    return ::recv(fd_, buf, size, 0);
  }

 private:
  int fd_;
};

bool same_peer(const sockaddr_in& a, const sockaddr_in& b) {
  return a.sin_addr.s_addr == b.sin_addr.s_addr && a.sin_port == b.sin_port;
}

}  // namespace

// ---- target ----

struct HilTarget::Impl {
  Model& model;
  UdpSocket socket;
  std::atomic<bool> stop{false};
  std::optional<sockaddr_in> session_peer;

  explicit Impl(Model& m) : model(m) {}
};

HilTarget::HilTarget(Model& model, std::uint16_t port)
    : impl_(std::make_unique<Impl>(model)) {
  impl_->socket.bind_local(port);
}

HilTarget::~HilTarget() = default;

std::uint16_t HilTarget::port() const { return impl_->socket.bound_port(); }

void HilTarget::request_stop() { impl_->stop.store(true); }

void HilTarget::serve() {
  std::uint8_t buf[kMaxDatagram];
  const size_t n_inputs = impl_->model.signals().inputs.size();

  while (!impl_->stop.load()) {
    if (!impl_->socket.wait_readable(100)) continue;
    sockaddr_in peer{};
    ssize_t got = impl_->socket.recv_from(buf, sizeof(buf), peer);
    if (got <= 0) continue;

    auto reply_error = [&](std::uint32_t seq, std::uint32_t time_ms) {
      Frame err{FrameType::error, seq, time_ms, {}};
      impl_->socket.send_to(encode_frame(err), peer);
    };

    auto frame = decode_frame({buf, static_cast<size_t>(got)});
    if (!frame) {
      reply_error(0, 0);
      continue;
    }
    // never answer response/error frames; a reflected error frame between
    // two endpoints would loop forever
    if (frame->type == FrameType::response || frame->type == FrameType::error)
      continue;

    if (!impl_->session_peer) {
      impl_->session_peer = peer;
    } else if (!same_peer(*impl_->session_peer, peer)) {
      reply_error(frame->seq, frame->time_ms);
      continue;
    }

    if (frame->type == FrameType::reset) {
      impl_->model.reset();
      Frame resp{FrameType::response, frame->seq, frame->time_ms,
                 impl_->model.current_outputs()};
      impl_->socket.send_to(encode_frame(resp), peer);
      continue;
    }

    // stimulus
    if (frame->values.size() != n_inputs) {
      reply_error(frame->seq, frame->time_ms);
      continue;
    }
    Frame resp{FrameType::response, frame->seq, frame->time_ms,
               impl_->model.step(frame->values)};
    impl_->socket.send_to(encode_frame(resp), peer);
  }
}

// ---- client ----

struct HilClient::Impl {
  UdpSocket socket;
  unsigned timeout_ms;
  std::uint32_t seq = 0;
};

HilClient::HilClient(const std::string& host, std::uint16_t port,
                     unsigned timeout_ms, std::uint16_t local_port)
    : impl_(std::make_unique<Impl>()) {
  impl_->timeout_ms = timeout_ms;
  if (local_port != 0) impl_->socket.bind_local(local_port);
  impl_->socket.connect_remote(host, port);
}

HilClient::~HilClient() = default;

namespace {

struct ExchangeResult {
  std::optional<Frame> response;  // nullopt => transport failure
  std::string error;
};

ExchangeResult exchange(UdpSocket& socket, const Frame& request,
                        unsigned timeout_ms) {
  socket.send(encode_frame(request));
  auto deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  std::uint8_t buf[kMaxDatagram];
  while (true) {
    auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                         deadline - std::chrono::steady_clock::now())
                         .count();
    if (remaining <= 0 || !socket.wait_readable(static_cast<int>(remaining)))
      return {std::nullopt, "timeout awaiting seq " +
                                std::to_string(request.seq)};
    ssize_t got = socket.recv(buf, sizeof(buf));
    if (got <= 0) continue;
    auto frame = decode_frame({buf, static_cast<size_t>(got)});
    if (!frame) continue;  // stray datagram
    if (frame->type == FrameType::error)
      return {std::nullopt,
              "target rejected frame seq " + std::to_string(request.seq)};
    if (frame->type != FrameType::response) continue;
    if (frame->seq < request.seq) continue;  // stale duplicate, discard
    if (frame->seq > request.seq)
      return {std::nullopt, "sequence mismatch: awaited " +
                                std::to_string(request.seq) + ", got " +
                                std::to_string(frame->seq)};
    return {*frame, ""};
  }
}

}  // namespace

TestRunRecord HilClient::run(const ModelSignals& signals,
                             const TestCase& testcase) {
  auto stimulus = build_stimulus(signals, testcase);

  TestRunRecord record;
  record.run_id = "HIL:" + testcase.case_id;
  record.case_id = testcase.case_id;
  record.environment = Environment::HIL;
  record.output_signals = signals.outputs;

  auto transport_error = [&](const std::string& message) {
    record.verdict = Verdict::error;
    record.note = message;
    return record;
  };

  Frame reset{FrameType::reset, ++impl_->seq, 0, {}};
  auto ack = exchange(impl_->socket, reset, impl_->timeout_ms);
  if (!ack.response) return transport_error(ack.error);

  unsigned period = testcase.sample_period_ms;
  for (size_t k = 0; k < stimulus.size(); ++k) {
    std::uint32_t t = static_cast<std::uint32_t>(k) * period;
    Frame stim{FrameType::stimulus, ++impl_->seq, t, stimulus[k]};
    auto result = exchange(impl_->socket, stim, impl_->timeout_ms);
    if (!result.response) return transport_error(result.error);
    if (result.response->values.size() != signals.outputs.size())
      return transport_error("response carries " +
                             std::to_string(result.response->values.size()) +
                             " signals, expected " +
                             std::to_string(signals.outputs.size()));
    record.samples.push_back(OutputSample{t, result.response->values});
  }

  evaluate_record(testcase, record);
  return record;
}

TestRunRecord run_hil(const std::string& host, std::uint16_t port,
                      const ModelSignals& signals, const TestCase& testcase,
                      unsigned timeout_ms) {
  HilClient client(host, port, timeout_ms);
  return client.run(signals, testcase);
}

}  // namespace certkit
