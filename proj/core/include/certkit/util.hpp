/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace certkit {

// ---- text helpers ----

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Splits on `sep` and trims each piece; empty pieces are dropped.
std::vector<std::string> split_list(std::string_view s, char sep);

bool starts_with(std::string_view s, std::string_view prefix);

/// Shortest round-trip decimal rendering of a double (locale-free).
std::string format_double(double v);

/// Strict full-string parse; returns nullopt on trailing garbage.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

/// True for labels safe to use as file names: [A-Za-z0-9._-]+, not
/// starting with a dot.
bool is_safe_label(std::string_view s);

std::string now_iso8601_utc();

// ---- escaping ----

/// Escapes backslash, LF and CR so a value fits on one `key: value` line.
std::string escape_line(std::string_view s);
std::string unescape_line(std::string_view s);

std::string html_escape(std::string_view s);

/// Escapes a CSV cell (RFC 4180 quoting, applied only when needed).
std::string csv_escape(std::string_view s);

/// RFC 4180-style CSV parse: quoted cells may contain commas, quotes and
/// newlines. Returns one row per record; a trailing newline adds no row.
std::vector<std::vector<std::string>> parse_csv(std::string_view content,
                                                std::string_view source_name);

// ---- file helpers ----

std::string read_file(const std::filesystem::path& path);

/// Writes via a temp file in the same directory, then renames into place.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace certkit
