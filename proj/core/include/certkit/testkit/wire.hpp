/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace certkit {

/// UDP lockstep frame layout (all multi-byte fields big-endian):
///
///   offset 0   magic "HILB" (4 ASCII bytes)
///   offset 4   version, 1 byte, = 1
///   offset 5   message type, 1 byte (0 stimulus, 1 response, 2 reset,
///              3 error)
///   offset 6   reserved, 2 bytes, = 0
///   offset 8   sequence number, u32
///   offset 12  sim time in ms, u32
///   offset 16  signal count, u16
///   offset 18  count IEEE-754 binary64 values, signal order as declared in
///              the model interface
enum class FrameType : std::uint8_t {
  stimulus = 0,
  response = 1,
  reset = 2,
  error = 3,
};

struct Frame {
  FrameType type = FrameType::stimulus;
  std::uint32_t seq = 0;
  std::uint32_t time_ms = 0;
  std::vector<double> values;
};

inline constexpr std::uint16_t kDefaultHilPort = 47811;
inline constexpr std::size_t kFrameHeaderSize = 18;  // header + count field

std::vector<std::uint8_t> encode_frame(const Frame& frame);

/// Returns nullopt for malformed input: bad magic or version, unknown type,
/// non-zero reserved bytes, or a length not matching the signal count.
std::optional<Frame> decode_frame(std::span<const std::uint8_t> data);

}  // namespace certkit
