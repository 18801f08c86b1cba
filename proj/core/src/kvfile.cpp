/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/kvfile.hpp"

#include <algorithm>

#include "certkit/errors.hpp"
#include "certkit/util.hpp"

namespace certkit {

std::optional<std::string> KvBlock::get(std::string_view key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return std::nullopt;
}

std::string KvBlock::get_or(std::string_view key,
                            std::string_view fallback) const {
  auto v = get(key);
  return v ? *v : std::string(fallback);
}

void KvBlock::set(std::string_view key, std::string_view value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::string(value);
      return;
    }
  }
  entries.emplace_back(std::string(key), std::string(value));
}

bool KvBlock::has(std::string_view key) const { return get(key).has_value(); }

void KvBlock::erase(std::string_view key) {
  entries.erase(std::remove_if(entries.begin(), entries.end(),
                               [&](const auto& e) { return e.first == key; }),
                entries.end());
}

KvBlock parse_kv_block(std::string_view content,
                       std::string_view source_name) {
  KvBlock block;
  size_t pos = 0;
  int line_no = 0;
  while (pos < content.size()) {
    size_t eol = content.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? content.substr(pos)
                                : content.substr(pos, eol - pos);
    size_t next = (eol == std::string_view::npos) ? content.size() : eol + 1;
    ++line_no;
    if (line.empty()) {
      // blank separator: the rest is the body, verbatim
      block.body = std::string(content.substr(next));
      return block;
    }
    size_t colon = line.find(": ");
    if (colon == std::string_view::npos) {
      if (!line.empty() && line.back() == ':')
        colon = line.size() - 1;  // "key:" with empty value
      else
        fail_usage(std::string(source_name) + ":" + std::to_string(line_no) +
                   ": expected 'key: value' header line");
    }
    std::string key(line.substr(0, colon));
    std::string value = colon + 2 <= line.size()
                            ? std::string(line.substr(colon + 2))
                            : std::string();
    block.entries.emplace_back(std::move(key), unescape_line(value));
    pos = next;
  }
  return block;
}

std::string render_kv_block(const KvBlock& block) {
  std::string out;
  for (const auto& [k, v] : block.entries) {
    out += k;
    out += ": ";
    out += escape_line(v);
    out += '\n';
  }
  if (!block.body.empty()) {
    out += '\n';
    out += block.body;
  }
  return out;
}

}  // namespace certkit
