/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/testkit/testcase.hpp"

#include <algorithm>
#include <set>

#include "certkit/errors.hpp"
#include "certkit/util.hpp"

namespace certkit {

unsigned TestCase::horizon_ms() const {
  unsigned horizon = 0;
  for (const auto& step : steps) {
    horizon = std::max(horizon, step.time_ms);
    for (const auto& e : step.expects)
      horizon = std::max(horizon, step.time_ms + e.deadline_ms.value_or(0));
  }
  return horizon;
}

namespace {

Expectation parse_expect_clause(const std::string& cell,
                                const std::string& where) {
  // expect <signal> = <value> [tol <tolerance>] [deadline <ms>]
  auto tokens = split_list(cell, ' ');
  if (tokens.size() < 4 || tokens[0] != "expect" || tokens[2] != "=")
    fail_usage(where + ": bad expect clause '" + cell + "'");
  Expectation e;
  e.signal = tokens[1];
  auto value = parse_double(tokens[3]);
  if (!value) fail_usage(where + ": bad expect value in '" + cell + "'");
  e.value = *value;
  size_t pos = 4;
  while (pos < tokens.size()) {
    if (tokens[pos] == "tol" && pos + 1 < tokens.size()) {
      auto tol = parse_double(tokens[pos + 1]);
      if (!tol || *tol < 0)
        fail_usage(where + ": bad tolerance in '" + cell + "'");
      e.comparison = Comparison::within;
      e.tolerance = *tol;
      pos += 2;
    } else if (tokens[pos] == "deadline" && pos + 1 < tokens.size()) {
      auto deadline = parse_int(tokens[pos + 1]);
      if (!deadline || *deadline < 0)
        fail_usage(where + ": bad deadline in '" + cell + "'");
      e.deadline_ms = static_cast<unsigned>(*deadline);
      pos += 2;
    } else {
      fail_usage(where + ": unexpected token '" + tokens[pos] + "' in '" +
                 cell + "'");
    }
  }
  return e;
}

}  // namespace

TestCase parse_testcase(std::string_view content,
                        std::string_view source_name) {
  TestCase tc;
  bool have_case = false;
  bool have_period = false;
  bool have_header = false;

  int line_no = 0;
  for (const auto& raw_line : split(content, '\n')) {
    ++line_no;
    std::string line = trim(raw_line);
    std::string where =
        std::string(source_name) + ":" + std::to_string(line_no);
    if (line.empty() || line[0] == '#') continue;

    if (!have_case) {
      if (!starts_with(line, "case:"))
        fail_usage(where + ": expected 'case: <id>' first");
      tc.case_id = trim(line.substr(5));
      if (tc.case_id.empty()) fail_usage(where + ": empty case id");
      have_case = true;
      continue;
    }
    if (!have_period) {
      if (!starts_with(line, "period_ms:"))
        fail_usage(where + ": expected 'period_ms: <n>' after the case id");
      auto period = parse_int(trim(line.substr(10)));
      if (!period || *period <= 0)
        fail_usage(where + ": sample period must be a positive integer");
      tc.sample_period_ms = static_cast<unsigned>(*period);
      have_period = true;
      continue;
    }
    if (!have_header) {
      auto cols = split(line, ',');
      if (cols.empty() || trim(cols[0]) != "time_ms")
        fail_usage(where + ": expected header row starting with 'time_ms'");
      std::set<std::string> seen;
      for (size_t i = 1; i < cols.size(); ++i) {
        std::string signal = trim(cols[i]);
        if (signal.empty()) fail_usage(where + ": empty signal column");
        if (!seen.insert(signal).second)
          fail_usage(where + ": duplicate signal column '" + signal + "'");
        tc.input_signals.push_back(signal);
      }
      have_header = true;
      continue;
    }

    auto cells = split(line, ',');
    Step step;
    auto time = parse_int(trim(cells[0]));
    if (!time || *time < 0) fail_usage(where + ": bad time_ms cell");
    step.time_ms = static_cast<unsigned>(*time);
    if (step.time_ms % tc.sample_period_ms != 0)
      fail_usage(where + ": step time " + std::to_string(step.time_ms) +
                 " is not a multiple of the sample period");
    if (!tc.steps.empty() && step.time_ms <= tc.steps.back().time_ms)
      fail_usage(where + ": step times must be strictly increasing");

    size_t i = 1;
    for (; i < cells.size() && i <= tc.input_signals.size(); ++i) {
      std::string cell = trim(cells[i]);
      if (starts_with(cell, "expect")) break;  // inputs may be left off
      if (cell.empty()) continue;              // hold previous value
      auto value = parse_double(cell);
      if (!value)
        fail_usage(where + ": bad value '" + cell + "' for signal '" +
                   tc.input_signals[i - 1] + "'");
      step.inputs[tc.input_signals[i - 1]] = *value;
    }
    for (; i < cells.size(); ++i) {
      std::string cell = trim(cells[i]);
      if (cell.empty()) continue;
      if (!starts_with(cell, "expect"))
        fail_usage(where + ": expected an expect clause, got '" + cell + "'");
      step.expects.push_back(parse_expect_clause(cell, where));
    }
    tc.steps.push_back(std::move(step));
  }

  if (!have_case || !have_period || !have_header)
    fail_usage(std::string(source_name) +
               ": incomplete test case (need case, period_ms and header row)");
  if (tc.steps.empty())
    fail_usage(std::string(source_name) + ": test case has no steps");
  return tc;
}

TestCase load_testcase(const std::filesystem::path& path) {
  return parse_testcase(read_file(path), path.string());
}

std::string render_testcase(const TestCase& tc) {
  std::string out;
  out += "case: " + tc.case_id + "\n";
  out += "period_ms: " + std::to_string(tc.sample_period_ms) + "\n";
  out += "time_ms";
  for (const auto& signal : tc.input_signals) out += "," + signal;
  out += "\n";
  for (const auto& step : tc.steps) {
    out += std::to_string(step.time_ms);
    for (const auto& signal : tc.input_signals) {
      out += ",";
      auto it = step.inputs.find(signal);
      if (it != step.inputs.end()) out += format_double(it->second);
    }
    for (const auto& e : step.expects) {
      out += ",expect " + e.signal + " = " + format_double(e.value);
      if (e.comparison == Comparison::within)
        out += " tol " + format_double(e.tolerance);
      if (e.deadline_ms) out += " deadline " + std::to_string(*e.deadline_ms);
    }
    out += "\n";
  }
  return out;
}

}  // namespace certkit
