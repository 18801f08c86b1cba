/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/testkit/records.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "certkit/errors.hpp"
#include "certkit/util.hpp"
#include "certkit/xml.hpp"

namespace certkit {

std::vector<RunRecordEntry> parse_run_records(std::string_view content,
                                              std::string_view source_name) {
  XmlElement root = parse_xml(content, source_name);
  if (root.name != "testruns")
    fail_usage(std::string(source_name) + ": expected <testruns> root, got <" +
               root.name + ">");

  std::vector<RunRecordEntry> entries;
  std::set<std::string> run_ids;
  for (const XmlElement* run : root.children_named("run")) {
    RunRecordEntry entry;
    TestRunRecord& record = entry.record;

    auto id = run->attr("id");
    auto case_id = run->attr("case");
    auto env = run->attr("env");
    auto verdict = run->attr("verdict");
    if (!id || !case_id || !env || !verdict)
      fail_usage(std::string(source_name) +
                 ": <run> needs id, case, env and verdict attributes");
    record.run_id = *id;
    record.case_id = *case_id;
    if (!run_ids.insert(record.run_id).second)
      fail_usage(std::string(source_name) + ": duplicate run id '" +
                 record.run_id + "'");

    auto environment = parse_environment(*env);
    if (!environment)
      fail_usage(std::string(source_name) + ": bad env '" + *env + "'");
    record.environment = *environment;
    auto v = parse_verdict(*verdict);
    if (!v)
      fail_usage(std::string(source_name) + ": bad verdict '" + *verdict +
                 "'");
    record.verdict = *v;
    entry.time = run->attr_or("time", "");

    // rebuild the sample matrix: signal order by first appearance, one
    // complete row per sample time
    std::vector<std::string> signals;
    std::map<unsigned, std::map<std::string, double>> by_time;
    for (const XmlElement* sample : run->children_named("sample")) {
      auto t = sample->attr("t");
      auto signal = sample->attr("signal");
      auto value = sample->attr("value");
      if (!t || !signal || !value)
        fail_usage(std::string(source_name) +
                   ": <sample> needs t, signal and value attributes");
      auto time = parse_int(*t);
      auto val = parse_double(*value);
      if (!time || *time < 0 || !val)
        fail_usage(std::string(source_name) + ": bad sample in run '" +
                   record.run_id + "'");
      if (std::find(signals.begin(), signals.end(), *signal) == signals.end())
        signals.push_back(*signal);
      by_time[static_cast<unsigned>(*time)][*signal] = *val;
    }
    record.output_signals = signals;
    for (const auto& [time, values] : by_time) {
      OutputSample sample;
      sample.time_ms = time;
      for (const auto& signal : signals) {
        auto it = values.find(signal);
        if (it == values.end())
          fail_usage(std::string(source_name) + ": run '" + record.run_id +
                     "' misses signal '" + signal + "' at t=" +
                     std::to_string(time));
        sample.outputs.push_back(it->second);
      }
      record.samples.push_back(std::move(sample));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<RunRecordEntry> load_run_records(
    const std::filesystem::path& path) {
  return parse_run_records(read_file(path), path.string());
}

std::string render_run_records(const std::vector<TestRunRecord>& records) {
  XmlElement root;
  root.name = "testruns";
  for (const auto& record : records) {
    XmlElement run;
    run.name = "run";
    run.attributes = {
        {"id", record.run_id},
        {"case", record.case_id},
        {"env", environment_name(record.environment)},
        {"verdict", verdict_name(record.verdict)},
    };
    for (const auto& sample : record.samples) {
      for (size_t i = 0; i < record.output_signals.size(); ++i) {
        XmlElement s;
        s.name = "sample";
        s.attributes = {
            {"t", std::to_string(sample.time_ms)},
            {"signal", record.output_signals[i]},
            {"value",
             i < sample.outputs.size() ? format_double(sample.outputs[i])
                                       : "0"},
        };
        run.children.push_back(std::move(s));
      }
    }
    root.children.push_back(std::move(run));
  }
  return render_xml(root);
}

IngestResult ingest_records(Store& store, Trace& trace,
                            const std::filesystem::path& xml_path) {
  if (!std::filesystem::exists(xml_path))
    fail_io("no such file: " + xml_path.string());
  auto entries = load_run_records(xml_path);

  // resolve every case id up front so a bad file changes nothing
  std::map<std::string, WorkItemId> surrogates;
  for (const auto& entry : entries) {
    const std::string& case_id = entry.record.case_id;
    if (surrogates.count(case_id)) continue;
    auto surrogate =
        store.find_by_field(ItemKind::TestCaseSurrogate, "case_id", case_id);
    if (!surrogate)
      fail_usage("no test case surrogate with case_id '" + case_id + "'");
    surrogates.emplace(case_id, surrogate->id);
  }

  IngestResult result;
  for (const auto& entry : entries) {
    const TestRunRecord& record = entry.record;
    if (store.find_by_field(ItemKind::TestRun, "run_id", record.run_id)) {
      ++result.skipped;
      continue;
    }
    std::map<std::string, std::string> fields = {
        {"run_id", record.run_id},
        {"case_id", record.case_id},
        {"env", environment_name(record.environment)},
        {"verdict", verdict_name(record.verdict)},
    };
    if (!entry.time.empty()) fields["time"] = entry.time;
    WorkItem item = store.create_item(ItemKind::TestRun, std::nullopt,
                                      "Test run " + record.run_id, "", false,
                                      std::move(fields));
    result.created.push_back(item.id);
    result.links.push_back(trace.add_link(item.id, LinkRole::Records,
                                          surrogates.at(record.case_id)));
  }
  return result;
}

}  // namespace certkit
