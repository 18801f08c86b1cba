/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "certkit/testkit/model.hpp"
#include "certkit/testkit/testcase.hpp"

namespace certkit {

enum class Environment { MIL, SIL, HIL };
std::string environment_name(Environment e);
std::optional<Environment> parse_environment(std::string_view name);

enum class Verdict { pass, fail, error };
std::string verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

struct OutputSample {
  unsigned time_ms = 0;
  std::vector<double> outputs;  // in record.output_signals order
};

struct ExpectationResult {
  unsigned step_time_ms = 0;
  Expectation expectation;
  bool satisfied = false;
  std::optional<unsigned> achieved_at_ms;  // first satisfying sample
};

struct TestRunRecord {
  std::string run_id;
  std::string case_id;
  Environment environment = Environment::MIL;
  Verdict verdict = Verdict::error;
  std::vector<std::string> output_signals;
  std::vector<OutputSample> samples;
  std::vector<ExpectationResult> latency;  // one entry per expectation
  std::string note;                        // transport/diagnostic detail
};

/// Replays the test case against an in-process model: the model is reset,
/// stepped once per sample period from t=0 through the case horizon, inputs
/// holding their last value between steps. Unknown signal names are a usage
/// error. The run is deterministic.
TestRunRecord run_mil(Model& model, const TestCase& testcase);

/// Checks signal names and builds the per-sample input vectors; shared by
/// the MIL runner and the HIL client. Element k covers sample time
/// k * period.
std::vector<std::vector<double>> build_stimulus(const ModelSignals& signals,
                                                const TestCase& testcase);

/// Evaluates expectations over recorded samples, filling verdict and
/// latency fields.
void evaluate_record(const TestCase& testcase, TestRunRecord& record);

struct Divergence {
  unsigned time_ms = 0;
  std::string signal;
  double a = 0.0;
  double b = 0.0;
};

struct EquivalenceVerdict {
  bool equivalent = true;
  std::vector<Divergence> divergences;
};

/// Sample-wise comparison of the recorded outputs of two runs of the same
/// test case. Tolerance 0 demands bit-equality; timing metadata (latency,
/// environment, run ids) is not compared. A sample-count mismatch is
/// reported as a divergence, not an error.
EquivalenceVerdict compare_runs(const TestRunRecord& a, const TestRunRecord& b,
                                double tolerance);

}  // namespace certkit
