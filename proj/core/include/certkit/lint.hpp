/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace certkit {

/// Parsed parts of a structured requirement statement of the shape
///
///   [<scope>] [when <condition>,] the <component> shall
///   [within <number> <unit>] <response>.
///
/// Component and response are mandatory; timing units are ms or s.
struct RequirementParts {
  std::string scope;      // optional, may be empty
  std::string condition;  // optional, may be empty
  std::string component;
  std::optional<unsigned> timing_value;
  std::string timing_unit;  // "ms" or "s" when timing_value is set
  std::string response;
};

enum class LintVerdict { conformant, nonconformant };

struct LintResult {
  LintVerdict verdict = LintVerdict::nonconformant;
  std::optional<RequirementParts> parts;
  std::vector<std::string> diagnostics;

  bool conformant() const { return verdict == LintVerdict::conformant; }
};

/// Advisory linting; never throws. A nonconformant statement carries
/// diagnostics describing what is missing or malformed.
LintResult lint_requirement(std::string_view text);

/// Renders parts back into the statement template. Re-linting the result
/// yields the same parts (for inputs free of keyword collisions).
std::string render_requirement(const RequirementParts& parts);

}  // namespace certkit
