/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "certkit/jobs.hpp"
#include "certkit/store.hpp"
#include "certkit/trace.hpp"

namespace certkit {

struct GateOptions {
  bool trace_gate = true;  // condition (b): requirement test coverage
  bool stale_gate = true;  // condition (c): artifact freshness
};

/// CI merge-gate verdict. The gate passes only when (a) every ingested and
/// job-produced test-run record has verdict pass, (b) every non-derived
/// requirement has an incoming Verifies link, and (c) no artifact is
/// outdated or missing. (b) and (c) can be disabled individually.
struct GateReport {
  size_t failing_runs = 0;
  size_t uncovered_requirements = 0;  // non-derived, no incoming Verifies
  size_t stale_artifacts = 0;
  GateOptions options;

  bool pass() const {
    return failing_runs == 0 &&
           (!options.trace_gate || uncovered_requirements == 0) &&
           (!options.stale_gate || stale_artifacts == 0);
  }

  /// Machine-readable summary, one `key: value` line per condition plus a
  /// final `gate: pass|fail` line.
  std::string summary() const;
};

GateReport evaluate_gate(Project& project, Store& store, Trace& trace,
                         JobEngine& engine, GateOptions options = {});

}  // namespace certkit
