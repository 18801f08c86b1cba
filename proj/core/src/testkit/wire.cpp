/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/testkit/wire.hpp"

#include <bit>
#include <cstring>

namespace certkit {

namespace {

constexpr std::uint8_t kMagic[4] = {'H', 'I', 'L', 'B'};
constexpr std::uint8_t kVersion = 1;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  for (int shift = 56; shift >= 0; shift -= 8)
    out.push_back(static_cast<std::uint8_t>(bits >> shift));
}

std::uint16_t get_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return (static_cast<std::uint32_t>(p[0]) << 24) |
         (static_cast<std::uint32_t>(p[1]) << 16) |
         (static_cast<std::uint32_t>(p[2]) << 8) |
         static_cast<std::uint32_t>(p[3]);
}

double get_f64(const std::uint8_t* p) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits = (bits << 8) | p[i];
  return std::bit_cast<double>(bits);
}

}  // namespace

std::vector<std::uint8_t> encode_frame(const Frame& frame) {
  std::vector<std::uint8_t> out;
  out.reserve(kFrameHeaderSize + frame.values.size() * 8);
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  out.push_back(static_cast<std::uint8_t>(frame.type));
  out.push_back(0);
  out.push_back(0);
  put_u32(out, frame.seq);
  put_u32(out, frame.time_ms);
  put_u16(out, static_cast<std::uint16_t>(frame.values.size()));
  for (double v : frame.values) put_f64(out, v);
  return out;
}

std::optional<Frame> decode_frame(std::span<const std::uint8_t> data) {
  if (data.size() < kFrameHeaderSize) return std::nullopt;
  if (std::memcmp(data.data(), kMagic, 4) != 0) return std::nullopt;
  if (data[4] != kVersion) return std::nullopt;
  if (data[5] > static_cast<std::uint8_t>(FrameType::error))
    return std::nullopt;
  if (data[6] != 0 || data[7] != 0) return std::nullopt;

  Frame frame;
  frame.type = static_cast<FrameType>(data[5]);
  frame.seq = get_u32(data.data() + 8);
  frame.time_ms = get_u32(data.data() + 12);
  std::uint16_t count = get_u16(data.data() + 16);
  if (data.size() != kFrameHeaderSize + static_cast<std::size_t>(count) * 8)
    return std::nullopt;
  frame.values.reserve(count);
  for (std::uint16_t i = 0; i < count; ++i)
    frame.values.push_back(get_f64(data.data() + kFrameHeaderSize + i * 8));
  return frame;
}

}  // namespace certkit
