/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "certkit/testkit/model.hpp"
#include "certkit/testkit/run.hpp"
#include "certkit/testkit/testcase.hpp"
#include "certkit/testkit/wire.hpp"

namespace certkit {

/// UDP lockstep target: each stimulus frame advances the model one sample
/// and is answered with a response frame carrying all outputs; a reset
/// frame re-initializes the model state. One client session at a time: the
/// first stimulus/reset sender becomes the session peer and frames from
/// any other address are answered with an error frame. Malformed frames
/// are discarded with an error frame and change no state.
class HilTarget {
 public:
  /// Binds the socket immediately; port 0 picks an ephemeral port.
  HilTarget(Model& model, std::uint16_t port);
  ~HilTarget();

  HilTarget(const HilTarget&) = delete;
  HilTarget& operator=(const HilTarget&) = delete;

  std::uint16_t port() const;

  /// Serves until request_stop(); runs in the calling thread.
  void serve();
  void request_stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Lockstep client session. One instance keeps one local address, so a
/// target sees successive runs as the same client. Each run starts with a
/// reset exchange, then replays the case one stimulus per sample, awaiting
/// the matching response before the next send. Stale duplicate responses
/// are discarded; a sequence number from the future, an error frame or a
/// per-frame timeout ends the run with verdict=error.
class HilClient {
 public:
  HilClient(const std::string& host, std::uint16_t port,
            unsigned timeout_ms = 500, std::uint16_t local_port = 0);
  ~HilClient();

  HilClient(const HilClient&) = delete;
  HilClient& operator=(const HilClient&) = delete;

  TestRunRecord run(const ModelSignals& signals, const TestCase& testcase);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around HilClient.
TestRunRecord run_hil(const std::string& host, std::uint16_t port,
                      const ModelSignals& signals, const TestCase& testcase,
                      unsigned timeout_ms = 500);

}  // namespace certkit
