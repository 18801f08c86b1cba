/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/testkit/run.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "certkit/errors.hpp"
#include "certkit/util.hpp"

namespace certkit {

std::string environment_name(Environment e) {
  switch (e) {
    case Environment::MIL:
      return "MIL";
    case Environment::SIL:
      return "SIL";
    case Environment::HIL:
      return "HIL";
  }
  return "?";
}

std::optional<Environment> parse_environment(std::string_view name) {
  std::string n = to_lower(name);
  if (n == "mil") return Environment::MIL;
  if (n == "sil") return Environment::SIL;
  if (n == "hil") return Environment::HIL;
  return std::nullopt;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::error:
      return "error";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  std::string n = to_lower(name);
  if (n == "pass") return Verdict::pass;
  if (n == "fail") return Verdict::fail;
  if (n == "error") return Verdict::error;
  return std::nullopt;
}

namespace {

bool bit_equal(double a, double b) {
  return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool values_match(double actual, double expected, Comparison comparison,
                  double tolerance) {
  if (comparison == Comparison::equals || tolerance == 0.0)
    return bit_equal(actual, expected);
  return std::abs(actual - expected) <= tolerance;
}

}  // namespace

std::vector<std::vector<double>> build_stimulus(const ModelSignals& signals,
                                                const TestCase& testcase) {
  for (const auto& signal : testcase.input_signals)
    if (signals.input_index(signal) < 0)
      fail_usage("unknown input signal: '" + signal + "'");
  for (const auto& step : testcase.steps)
    for (const auto& e : step.expects)
      if (signals.output_index(e.signal) < 0)
        fail_usage("unknown output signal: '" + e.signal + "'");

  unsigned period = testcase.sample_period_ms;
  size_t samples = testcase.horizon_ms() / period + 1;
  std::vector<std::vector<double>> stimulus;
  stimulus.reserve(samples);

  std::vector<double> current(signals.inputs.size(), 0.0);
  size_t next_step = 0;
  for (size_t k = 0; k < samples; ++k) {
    unsigned t = static_cast<unsigned>(k) * period;
    if (next_step < testcase.steps.size() &&
        testcase.steps[next_step].time_ms == t) {
      for (const auto& [signal, value] : testcase.steps[next_step].inputs)
        current[static_cast<size_t>(signals.input_index(signal))] = value;
      ++next_step;
    }
    stimulus.push_back(current);
  }
  return stimulus;
}

void evaluate_record(const TestCase& testcase, TestRunRecord& record) {
  record.latency.clear();
  bool all_satisfied = true;
  unsigned period = testcase.sample_period_ms;

  for (const auto& step : testcase.steps) {
    for (const auto& e : step.expects) {
      ExpectationResult result;
      result.step_time_ms = step.time_ms;
      result.expectation = e;

      int out_idx = -1;
      for (size_t i = 0; i < record.output_signals.size(); ++i)
        if (record.output_signals[i] == e.signal) out_idx = static_cast<int>(i);
      if (out_idx < 0) {
        all_satisfied = false;
        record.latency.push_back(std::move(result));
        continue;
      }

      unsigned window_end = step.time_ms + e.deadline_ms.value_or(0);
      size_t first = step.time_ms / period;
      size_t last = window_end / period;
      for (size_t k = first; k <= last && k < record.samples.size(); ++k) {
        if (record.samples[k].outputs.size() <= static_cast<size_t>(out_idx))
          continue;
        double actual =
            record.samples[k].outputs[static_cast<size_t>(out_idx)];
        if (values_match(actual, e.value, e.comparison, e.tolerance)) {
          result.satisfied = true;
          result.achieved_at_ms = record.samples[k].time_ms;
          break;
        }
      }
      if (!result.satisfied) all_satisfied = false;
      record.latency.push_back(std::move(result));
    }
  }
  record.verdict = all_satisfied ? Verdict::pass : Verdict::fail;
}

TestRunRecord run_mil(Model& model, const TestCase& testcase) {
  auto stimulus = build_stimulus(model.signals(), testcase);

  TestRunRecord record;
  record.run_id = "MIL:" + testcase.case_id;
  record.case_id = testcase.case_id;
  record.environment = Environment::MIL;
  record.output_signals = model.signals().outputs;

  model.reset();
  unsigned period = testcase.sample_period_ms;
  for (size_t k = 0; k < stimulus.size(); ++k) {
    OutputSample sample;
    sample.time_ms = static_cast<unsigned>(k) * period;
    sample.outputs = model.step(stimulus[k]);
    record.samples.push_back(std::move(sample));
  }

  evaluate_record(testcase, record);
  return record;
}

EquivalenceVerdict compare_runs(const TestRunRecord& a, const TestRunRecord& b,
                                double tolerance) {
  if (a.case_id != b.case_id)
    fail_usage("cannot compare runs of different cases: '" + a.case_id +
               "' vs '" + b.case_id + "'");
  if (a.output_signals != b.output_signals)
    fail_usage("cannot compare runs with different output signals");
  if (tolerance < 0) fail_usage("tolerance must be non-negative");

  EquivalenceVerdict verdict;
  size_t common = std::min(a.samples.size(), b.samples.size());
  for (size_t k = 0; k < common; ++k) {
    const auto& sa = a.samples[k];
    const auto& sb = b.samples[k];
    if (sa.time_ms != sb.time_ms) {
      verdict.divergences.push_back(Divergence{
          sa.time_ms, "sample_time", static_cast<double>(sa.time_ms),
          static_cast<double>(sb.time_ms)});
      continue;
    }
    for (size_t i = 0; i < a.output_signals.size(); ++i) {
      double va = i < sa.outputs.size() ? sa.outputs[i] : 0.0;
      double vb = i < sb.outputs.size() ? sb.outputs[i] : 0.0;
      bool match = tolerance == 0.0 ? bit_equal(va, vb)
                                    : std::abs(va - vb) <= tolerance;
      if (!match)
        verdict.divergences.push_back(
            Divergence{sa.time_ms, a.output_signals[i], va, vb});
    }
  }
  if (a.samples.size() != b.samples.size()) {
    unsigned t = common < a.samples.size()
                     ? a.samples[common].time_ms
                     : (common < b.samples.size() ? b.samples[common].time_ms
                                                  : 0);
    verdict.divergences.push_back(
        Divergence{t, "sample_count", static_cast<double>(a.samples.size()),
                   static_cast<double>(b.samples.size())});
  }
  verdict.equivalent = verdict.divergences.empty();
  return verdict;
}

}  // namespace certkit
