/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/actions.hpp"

#include <cctype>
#include <cstdlib>

#include "certkit/compliance.hpp"
#include "certkit/errors.hpp"
#include "certkit/lint.hpp"
#include "certkit/store.hpp"
#include "certkit/testkit/model.hpp"
#include "certkit/testkit/records.hpp"
#include "certkit/testkit/run.hpp"
#include "certkit/testkit/testcase.hpp"
#include "certkit/trace.hpp"
#include "certkit/util.hpp"

namespace certkit {

namespace fs = std::filesystem;

namespace {

void write_temp(const fs::path& path, std::string_view content) {
  if (path.empty()) return;
  write_file_atomic(path, content);
}

void action_emit_trace_report(ActionContext& ctx) {
  auto role = parse_link_role(ctx.param_or("role", ""));
  if (!role) fail_usage("emit-trace-report: missing or bad 'role' param");
  std::string dir_text = to_lower(ctx.param_or("direction", ""));
  if (dir_text != "outgoing" && dir_text != "incoming")
    fail_usage("emit-trace-report: direction must be outgoing or incoming");
  Direction direction =
      dir_text == "outgoing" ? Direction::outgoing : Direction::incoming;

  SourceFilter filter;
  std::string kind_text = ctx.param_or("kind", "Requirement");
  auto kind = parse_item_kind(kind_text);
  if (!kind) fail_usage("emit-trace-report: bad kind '" + kind_text + "'");
  filter.kind = *kind;
  std::string level = ctx.param_or("level", "");
  if (!level.empty()) filter.level = level;

  Store store(ctx.project());
  Trace trace(ctx.project(), store);
  TraceReport report = trace.coverage(filter, *role, direction);
  write_temp(ctx.output_path_with_extension(".csv"),
             render_trace_report_csv(report));
  write_temp(ctx.output_path_with_extension(".html"),
             render_trace_report_html(report));
}

void action_lint_all_requirements(ActionContext& ctx) {
  Store store(ctx.project());
  std::string csv = "id,verdict,diagnostics\n";
  for (const auto& item : store.list_items(ItemKind::Requirement)) {
    LintResult result = lint_requirement(item.body);
    std::string diagnostics;
    for (const auto& d : result.diagnostics) {
      if (!diagnostics.empty()) diagnostics += "; ";
      diagnostics += d;
    }
    csv += item.id.str() + "," +
           (result.conformant() ? "conformant" : "nonconformant") + "," +
           csv_escape(diagnostics) + "\n";
  }
  fs::path out = ctx.output_path_with_extension(".csv");
  if (out.empty()) fail_usage("lint-all-requirements needs a .csv output");
  write_temp(out, csv);
}

void action_run_testcases_mil(ActionContext& ctx) {
  auto model = make_model(ctx.param_or("model", "amds"));
  std::vector<TestRunRecord> records;
  for (const auto& input : ctx.input_files()) {
    if (!input.ends_with(".tc")) continue;
    TestCase testcase = load_testcase(ctx.input_path(input));
    records.push_back(run_mil(*model, testcase));
  }
  fs::path xml_out = ctx.output_path_with_extension(".xml");
  if (xml_out.empty()) fail_usage("run-testcases-mil needs a .xml output");
  write_temp(xml_out, render_run_records(records));

  fs::path csv_out = ctx.output_path_with_extension(".csv");
  if (!csv_out.empty()) {
    std::string csv = "case,verdict\n";
    for (const auto& r : records)
      csv += csv_escape(r.case_id) + "," + verdict_name(r.verdict) + "\n";
    write_temp(csv_out, csv);
  }
}

void action_compare_mil_hil(ActionContext& ctx) {
  std::string a_path = ctx.param_or("a", "");
  std::string b_path = ctx.param_or("b", "");
  if (a_path.empty() || b_path.empty())
    fail_usage("compare-mil-hil: params 'a' and 'b' name the record files");
  auto tolerance = parse_double(ctx.param_or("tolerance", "0"));
  if (!tolerance || *tolerance < 0)
    fail_usage("compare-mil-hil: bad tolerance");

  auto runs_a = load_run_records(ctx.input_path(a_path));
  auto runs_b = load_run_records(ctx.input_path(b_path));

  std::string csv = "case,verdict,divergences\n";
  std::vector<std::string> problems;
  for (const auto& ea : runs_a) {
    const RunRecordEntry* match = nullptr;
    for (const auto& eb : runs_b)
      if (eb.record.case_id == ea.record.case_id) match = &eb;
    if (!match) {
      problems.push_back("case '" + ea.record.case_id + "' missing from " +
                         b_path);
      continue;
    }
    EquivalenceVerdict verdict =
        compare_runs(ea.record, match->record, *tolerance);
    csv += csv_escape(ea.record.case_id) + "," +
           (verdict.equivalent ? "equivalent" : "divergent") + "," +
           std::to_string(verdict.divergences.size()) + "\n";
    if (!verdict.equivalent) {
      const Divergence& d = verdict.divergences.front();
      problems.push_back("case '" + ea.record.case_id + "' diverges at t=" +
                         std::to_string(d.time_ms) + " " + d.signal + ": " +
                         format_double(d.a) + " vs " + format_double(d.b));
    }
  }
  if (!problems.empty()) {
    std::string message = "MIL/HIL equivalence failed: ";
    for (size_t i = 0; i < problems.size(); ++i) {
      if (i) message += "; ";
      message += problems[i];
    }
    fail_usage(message);
  }
  fs::path out = ctx.output_path_with_extension(".csv");
  if (out.empty()) fail_usage("compare-mil-hil needs a .csv output");
  write_temp(out, csv);
}

void action_emit_compliance_matrix(ActionContext& ctx) {
  std::string level_text = ctx.param_or("level", "");
  if (level_text.size() != 1)
    fail_usage("emit-compliance-matrix: 'level' must be A, B, C or D");
  char level = static_cast<char>(std::toupper(level_text[0]));
  auto threshold = parse_int(ctx.param_or("threshold", "6"));
  if (!threshold) fail_usage("emit-compliance-matrix: bad threshold");

  std::string catalog_path = ctx.param_or("catalog", "catalog.csv");
  Catalog catalog = Catalog::load(ctx.input_path(catalog_path));
  catalog.select_subset(static_cast<int>(*threshold));

  // each declared output names its standard: compliance_<standard>_<level>
  for (size_t i = 0; i < ctx.job().outputs.size(); ++i) {
    fs::path declared(ctx.job().outputs[i]);
    std::string stem = declared.stem().string();
    std::string ext = declared.extension().string();
    auto parts = split(stem, '_');
    if (parts.size() != 3 || parts[0] != "compliance")
      fail_usage("emit-compliance-matrix: output '" + ctx.job().outputs[i] +
                 "' must be named compliance_<standard>_<level>.{csv,html}");
    auto standard = parse_standard(parts[1]);
    if (!standard || parts[2].size() != 1)
      fail_usage("emit-compliance-matrix: bad output name '" +
                 ctx.job().outputs[i] + "'");
    MatrixReport report = catalog.matrix(*standard, parts[2][0]);
    if (parts[2][0] != level)
      fail_usage("emit-compliance-matrix: output level does not match the "
                 "'level' param");
    if (ext == ".csv")
      write_temp(ctx.output_path(i), render_matrix_csv(report));
    else if (ext == ".html")
      write_temp(ctx.output_path(i), render_matrix_html(report));
    else
      fail_usage("emit-compliance-matrix: output must be .csv or .html");
  }
}

void action_copy(ActionContext& ctx) {
  const Job& job = ctx.job();
  if (job.inputs.size() != job.outputs.size())
    fail_usage("copy: needs as many inputs as outputs");
  for (size_t i = 0; i < job.inputs.size(); ++i) {
    fs::path src = ctx.input_path(job.inputs[i]);
    if (!fs::exists(src)) fail_io("copy: missing input '" + job.inputs[i] + "'");
    write_temp(ctx.output_path(i), read_file(src));
  }
}

void action_exec(ActionContext& ctx) {
  std::string cmd = ctx.param_or("cmd", "");
  if (cmd.empty()) fail_usage("exec: missing 'cmd' param");
  for (size_t i = 0; i < ctx.job().outputs.size(); ++i) {
    std::string var = "CERTKIT_OUT" + std::to_string(i);
    ::setenv(var.c_str(), ctx.output_path(i).c_str(), 1);
  }
  std::string full = "cd '" + ctx.project().root().string() + "' && " + cmd;
  int rc = std::system(full.c_str());
  if (rc != 0)
    fail_io("exec: command failed with status " + std::to_string(rc));
}

}  // namespace

ActionRegistry default_action_registry() {
  return ActionRegistry{
      {"emit-trace-report", action_emit_trace_report},
      {"lint-all-requirements", action_lint_all_requirements},
      {"run-testcases-mil", action_run_testcases_mil},
      {"compare-mil-hil", action_compare_mil_hil},
      {"emit-compliance-matrix", action_emit_compliance_matrix},
      {"copy", action_copy},
      {"exec", action_exec},
  };
}

}  // namespace certkit
