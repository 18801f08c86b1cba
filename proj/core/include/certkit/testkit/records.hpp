/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "certkit/store.hpp"
#include "certkit/testkit/run.hpp"
#include "certkit/trace.hpp"

namespace certkit {

/// Test-run record file schema: root `<testruns>` with `<run id case env
/// verdict [time]>` children, each optionally carrying `<sample t signal
/// value/>` elements. The `time` attribute is accepted for records uploaded
/// from external rigs; files written by this tool omit it so that report
/// artifacts stay byte-deterministic.
struct RunRecordEntry {
  TestRunRecord record;
  std::string time;  // ISO-8601 when present
};

std::vector<RunRecordEntry> parse_run_records(std::string_view content,
                                              std::string_view source_name);
std::vector<RunRecordEntry> load_run_records(
    const std::filesystem::path& path);

std::string render_run_records(const std::vector<TestRunRecord>& records);

struct IngestResult {
  std::vector<WorkItemId> created;  // new TestRun items, in file order
  size_t skipped = 0;               // run ids already present
  std::vector<Link> links;          // Records links added
};

/// Creates one TestRun work item per `<run>` element and links it to the
/// TestCaseSurrogate whose `case_id` custom field matches the run's case.
/// Idempotent: a run id that is already in the store is skipped. All case
/// ids are resolved before anything is written.
IngestResult ingest_records(Store& store, Trace& trace,
                            const std::filesystem::path& xml_path);

}  // namespace certkit
