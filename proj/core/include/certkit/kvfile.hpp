/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace certkit {

/// A plain-text block of `key: value` header lines, an optional blank
/// separator line and a free-text body. This is the shared on-disk shape of
/// work items, baselines, manifests and the project configuration. Header
/// values are single-line (LF/CR escaped with backslashes); the body is
/// stored verbatim.
struct KvBlock {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string body;

  std::optional<std::string> get(std::string_view key) const;
  std::string get_or(std::string_view key, std::string_view fallback) const;
  void set(std::string_view key, std::string_view value);
  bool has(std::string_view key) const;
  void erase(std::string_view key);
};

/// Parses one block from full file content. Throws Error(usage) on a header
/// line without a colon.
KvBlock parse_kv_block(std::string_view content, std::string_view source_name);

/// Renders back to text: header lines in entry order, blank line, body.
/// The blank line and body are omitted when the body is empty.
std::string render_kv_block(const KvBlock& block);

}  // namespace certkit
