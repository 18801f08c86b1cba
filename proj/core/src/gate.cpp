/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/gate.hpp"

#include "certkit/testkit/records.hpp"
#include "certkit/testkit/run.hpp"
#include "certkit/util.hpp"

namespace certkit {

std::string GateReport::summary() const {
  std::string out;
  out += "failing runs: " + std::to_string(failing_runs) + "\n";
  out += "uncovered requirements: " +
         (options.trace_gate ? std::to_string(uncovered_requirements)
                             : std::string("skipped")) +
         "\n";
  out += "stale artifacts: " +
         (options.stale_gate ? std::to_string(stale_artifacts)
                             : std::string("skipped")) +
         "\n";
  out += std::string("gate: ") + (pass() ? "pass" : "fail") + "\n";
  return out;
}

GateReport evaluate_gate(Project& project, Store& store, Trace& trace,
                         JobEngine& engine, GateOptions options) {
  GateReport report;
  report.options = options;

  // (a) every ingested test-run work item passes ...
  for (const auto& item : store.list_items(ItemKind::TestRun)) {
    auto verdict = item.custom_fields.find("verdict");
    if (verdict == item.custom_fields.end() || verdict->second != "pass")
      ++report.failing_runs;
  }
  // ... and every record produced by a test-running job passes
  for (const auto& job : engine.jobs()) {
    if (job.action != "run-testcases-mil") continue;
    for (const auto& output : job.outputs) {
      if (!output.ends_with(".xml")) continue;
      auto path = project.resolve(output);
      if (!std::filesystem::exists(path)) continue;  // staleness covers this
      for (const auto& entry : load_run_records(path))
        if (entry.record.verdict != Verdict::pass) ++report.failing_runs;
    }
  }

  // (b) requirements without an incoming Verifies link, derived exempt
  TraceReport coverage = trace.coverage(
      SourceFilter{ItemKind::Requirement, std::nullopt}, LinkRole::Verifies,
      Direction::incoming);
  for (const auto& row : coverage.rows) {
    if (row.status != CoverageStatus::uncovered) continue;
    auto id = WorkItemId::parse(row.id);
    if (id && store.get_item(*id).derived) continue;
    ++report.uncovered_requirements;
  }

  // (c) artifact freshness
  for (const auto& [artifact, state] : engine.status())
    if (state != ArtifactState::valid) ++report.stale_artifacts;

  return report;
}

}  // namespace certkit
