/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace certkit {

/// SHA-256 of a byte string, rendered as 64 lowercase hex digits.
std::string sha256_hex(std::string_view data);

/// SHA-256 of a file's bytes. Throws Error(io) if the file cannot be read.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace certkit
