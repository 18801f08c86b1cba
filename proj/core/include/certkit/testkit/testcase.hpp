/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace certkit {

enum class Comparison { equals, within };

/// An expectation attached to a step: the signal must compare equal to
/// `value` at some sample in [step time, step time + deadline]. `equals`
/// means bit-equality of the encoded value; `within` allows |a-b| <=
/// tolerance (tolerance 0 again meaning bit-equality).
struct Expectation {
  std::string signal;
  Comparison comparison = Comparison::equals;
  double value = 0.0;
  double tolerance = 0.0;
  std::optional<unsigned> deadline_ms;
};

struct Step {
  unsigned time_ms = 0;
  std::map<std::string, double> inputs;  // unnamed signals hold their value
  std::vector<Expectation> expects;
};

/// A timed stimulus/expectation sequence, authored in a CSV-like text file:
///
///   case: AMDS-BTN1-DISC
///   period_ms: 10
///   time_ms,btn1,btn2,engage_cmd
///   0,0,0,0,expect clutch_engaged = 1
///   50,1,,,expect clutch_engaged = 0 deadline 100
///
/// Empty input cells hold the previous value (0.0 before the first
/// assignment). Cells starting with `expect` are expectation clauses:
/// `expect <signal> = <value> [tol <tolerance>] [deadline <ms>]`.
struct TestCase {
  std::string case_id;
  unsigned sample_period_ms = 0;
  std::vector<std::string> input_signals;  // column order of the file
  std::vector<Step> steps;

  /// Last sample time needed to evaluate every step and deadline.
  unsigned horizon_ms() const;
};

TestCase parse_testcase(std::string_view content,
                        std::string_view source_name);
TestCase load_testcase(const std::filesystem::path& path);
std::string render_testcase(const TestCase& testcase);

}  // namespace certkit
