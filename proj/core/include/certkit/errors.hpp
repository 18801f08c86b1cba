/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>

namespace certkit {

/// Error categories, aligned with the CLI exit-code vocabulary:
/// usage/config problems exit 2, I/O and transport problems exit 3.
/// Policy outcomes (failing gate, failing test verdicts) are returned
/// as values, never thrown.
enum class ErrorKind {
  usage,
  io,
  transport,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::usage:
        return 2;
      case ErrorKind::io:
      case ErrorKind::transport:
        return 3;
    }
    return 3;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_usage(const std::string& message) {
  throw Error(ErrorKind::usage, message);
}

[[noreturn]] inline void fail_io(const std::string& message) {
  throw Error(ErrorKind::io, message);
}

[[noreturn]] inline void fail_transport(const std::string& message) {
  throw Error(ErrorKind::transport, message);
}

}  // namespace certkit
