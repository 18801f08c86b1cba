/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// certkit -- command-line front end for the certification-lifecycle toolkit:
// work-item store, trace links and reports, verification job engine,
// objective compliance matrices, MIL/HIL test execution and the CI merge
// gate. One command per process; exit codes: 0 success or gate pass, 1
// policy failure (failing tests, uncovered requirements, stale artifacts),
// 2 usage or configuration error, 3 I/O or transport error.

#include <csignal>
#include <functional>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "certkit/actions.hpp"
#include "certkit/compliance.hpp"
#include "certkit/errors.hpp"
#include "certkit/gate.hpp"
#include "certkit/jobs.hpp"
#include "certkit/lint.hpp"
#include "certkit/project.hpp"
#include "certkit/store.hpp"
#include "certkit/testkit/hil.hpp"
#include "certkit/testkit/model.hpp"
#include "certkit/testkit/records.hpp"
#include "certkit/testkit/run.hpp"
#include "certkit/testkit/testcase.hpp"
#include "certkit/testkit/wire.hpp"
#include "certkit/trace.hpp"
#include "certkit/util.hpp"
#include "certkit/xml.hpp"

namespace fs = std::filesystem;
using namespace certkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPolicy = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

WorkItemId parse_id_arg(const std::string& text) {
  auto id = WorkItemId::parse(text);
  if (!id) fail_usage("bad work item id: '" + text + "'");
  return *id;
}

LinkRole parse_role_arg(const std::string& text) {
  auto role = parse_link_role(text);
  if (!role) fail_usage("bad link role: '" + text + "'");
  return *role;
}

ItemKind parse_kind_arg(const std::string& text) {
  auto kind = parse_item_kind(text);
  if (!kind) fail_usage("bad item kind: '" + text + "'");
  return *kind;
}

std::map<std::string, std::string> parse_field_args(
    const std::vector<std::string>& args) {
  std::map<std::string, std::string> fields;
  for (const auto& arg : args) {
    size_t eq = arg.find('=');
    if (eq == std::string::npos)
      fail_usage("--field expects key=value, got '" + arg + "'");
    fields[arg.substr(0, eq)] = arg.substr(eq + 1);
  }
  return fields;
}

struct FormatChoice {
  bool csv = true;
  bool html = true;
};

FormatChoice parse_format(const std::string& text) {
  std::string f = to_lower(text);
  if (f == "csv") return {true, false};
  if (f == "html") return {false, true};
  if (f == "both") return {true, true};
  fail_usage("--format must be csv, html or both");
}

void write_report_pair(const Project& project, const std::string& stem,
                       const FormatChoice& format, const std::string& csv,
                       const std::string& html) {
  fs::path dir = project.reports_dir();
  if (format.csv) {
    write_file_atomic(dir / (stem + ".csv"), csv);
    std::cout << "wrote reports/" << stem << ".csv\n";
  }
  if (format.html) {
    write_file_atomic(dir / (stem + ".html"), html);
    std::cout << "wrote reports/" << stem << ".html\n";
  }
}

HilTarget* g_serving_target = nullptr;

void handle_stop_signal(int) {
  if (g_serving_target) g_serving_target->request_stop();
}

// sample job definitions written by `init`; trace and lint jobs over the
// fresh (empty) store plus a compliance matrix over the starter catalog
constexpr std::string_view kSampleJobs = R"(# verification jobs; run with: certkit jobs run
job: lint-requirements
inputs: items/REQ-*.wi
outputs: reports/lint.csv
action: lint-all-requirements

job: trace-refines
inputs: items/REQ-*.wi, links.tsv
outputs: reports/trace_refines_outgoing.csv, reports/trace_refines_outgoing.html
action: emit-trace-report
param.role: refines
param.direction: outgoing

job: trace-verifies
inputs: items/REQ-*.wi, links.tsv
outputs: reports/trace_verifies_incoming.csv, reports/trace_verifies_incoming.html
action: emit-trace-report
param.role: verifies
param.direction: incoming

job: compliance-matrix
inputs: catalog.csv
outputs: compliance_outputs_placeholder
action: emit-compliance-matrix
param.level: C
)";

std::string sample_jobs_cfg() {
  std::string cfg{kSampleJobs};
  std::string outputs =
      "reports/compliance_DO-178C_C.csv, reports/compliance_DO-178C_C.html, "
      "reports/compliance_DO-331_C.csv, reports/compliance_DO-331_C.html";
  size_t pos = cfg.find("compliance_outputs_placeholder");
  cfg.replace(pos, std::string("compliance_outputs_placeholder").size(),
              outputs);
  return cfg;
}

int run_command(int argc, char** argv) {
  CLI::App app{"certification-lifecycle toolkit"};
  app.require_subcommand(1);

  std::string project_dir = ".";
  app.add_option("--project", project_dir, "project directory")
      ->envname("CERTKIT_PROJECT");
  std::string format_text = "both";
  app.add_option("--format", format_text, "report format: csv, html or both");

  // ---- init ----
  auto* cmd_init = app.add_subcommand("init", "create a project skeleton");
  std::string init_path;
  cmd_init->add_option("path", init_path, "directory (default: --project)");
  std::string init_levels;
  cmd_init->add_option("--levels", init_levels,
                       "comma-separated level labels, highest first");

  // ---- add ----
  auto* cmd_add = app.add_subcommand("add", "create a work item");
  std::string add_kind, add_level, add_title, add_body, add_body_file;
  bool add_derived = false;
  std::vector<std::string> add_fields;
  cmd_add->add_option("--kind", add_kind)->required();
  cmd_add->add_option("--level", add_level, "requirement level label");
  cmd_add->add_option("--title", add_title)->required();
  cmd_add->add_option("--body", add_body);
  cmd_add->add_option("--body-file", add_body_file, "read the body from a file");
  cmd_add->add_flag("--derived", add_derived, "derived requirement");
  cmd_add->add_option("--field", add_fields, "custom field key=value");

  // ---- edit ----
  auto* cmd_edit = app.add_subcommand("edit", "update fields of a work item");
  std::string edit_id;
  cmd_edit->add_option("id", edit_id)->required();
  std::optional<std::string> edit_title, edit_body, edit_level, edit_derived;
  cmd_edit->add_option("--title", edit_title);
  cmd_edit->add_option("--body", edit_body);
  cmd_edit->add_option("--level", edit_level);
  cmd_edit->add_option("--derived", edit_derived, "true or false");
  std::vector<std::string> edit_fields, edit_unset;
  cmd_edit->add_option("--field", edit_fields, "custom field key=value");
  cmd_edit->add_option("--unset-field", edit_unset, "remove a custom field");

  // ---- show ----
  auto* cmd_show = app.add_subcommand("show", "print a work item");
  std::string show_id;
  cmd_show->add_option("id", show_id)->required();

  // ---- link / suspects / mark-reviewed ----
  auto* cmd_link = app.add_subcommand("link", "add a trace link");
  std::string link_source, link_role, link_target;
  cmd_link->add_option("source", link_source)->required();
  cmd_link->add_option("role", link_role)->required();
  cmd_link->add_option("target", link_target)->required();

  auto* cmd_suspects =
      app.add_subcommand("suspects", "list links whose endpoints changed");

  auto* cmd_reviewed = app.add_subcommand(
      "mark-reviewed", "re-record endpoint revisions of a link");
  std::string rev_source, rev_role, rev_target;
  cmd_reviewed->add_option("source", rev_source)->required();
  cmd_reviewed->add_option("role", rev_role)->required();
  cmd_reviewed->add_option("target", rev_target)->required();

  // ---- lint ----
  auto* cmd_lint =
      app.add_subcommand("lint", "check a requirement statement (advisory)");
  std::string lint_text, lint_item;
  cmd_lint->add_option("--text", lint_text, "statement text");
  cmd_lint->add_option("--item", lint_item, "lint the body of a work item");

  // ---- baseline / diff ----
  auto* cmd_baseline = app.add_subcommand("baseline", "snapshot item digests");
  std::string baseline_label;
  cmd_baseline->add_option("label", baseline_label)->required();

  auto* cmd_diff = app.add_subcommand("diff", "compare two baselines");
  std::string diff_a, diff_b;
  cmd_diff->add_option("label_a", diff_a)->required();
  cmd_diff->add_option("label_b", diff_b)->required();

  // ---- report ----
  auto* cmd_report = app.add_subcommand("report", "write report files");
  cmd_report->require_subcommand(1);
  auto* report_trace = cmd_report->add_subcommand("trace", "trace coverage");
  std::string trace_role, trace_direction, trace_kind = "requirement",
                                           trace_level;
  report_trace->add_option("--role", trace_role)->required();
  report_trace->add_option("--direction", trace_direction)->required();
  report_trace->add_option("--kind", trace_kind);
  report_trace->add_option("--level", trace_level);
  auto* report_status =
      cmd_report->add_subcommand("status", "artifact freshness overview");
  auto* report_compliance =
      cmd_report->add_subcommand("compliance", "objective compliance matrix");
  std::string compliance_level;
  int compliance_threshold = 6;
  std::string compliance_catalog = "catalog.csv";
  report_compliance->add_option("--level", compliance_level)->required();
  report_compliance->add_option("--threshold", compliance_threshold,
                                "selection threshold (3..9)");
  report_compliance->add_option("--catalog", compliance_catalog,
                                "catalog file, project-relative");

  // ---- jobs ----
  auto* cmd_jobs = app.add_subcommand("jobs", "verification job engine");
  cmd_jobs->require_subcommand(1);
  auto* jobs_run = cmd_jobs->add_subcommand(
      "run", "execute jobs with missing or outdated outputs");
  auto* jobs_plan =
      cmd_jobs->add_subcommand("plan", "show which jobs a run would execute");
  auto* jobs_status = cmd_jobs->add_subcommand("status", "artifact states");
  auto* jobs_impact = cmd_jobs->add_subcommand(
      "impact", "jobs and artifacts affected by changing the given paths");
  std::vector<std::string> impact_paths;
  jobs_impact->add_option("paths", impact_paths)->required();

  // ---- gate ----
  auto* cmd_gate = app.add_subcommand("gate", "CI merge gate");
  bool no_trace_gate = false, no_stale_gate = false;
  cmd_gate->add_flag("--no-trace-gate", no_trace_gate,
                     "skip the requirement-coverage condition");
  cmd_gate->add_flag("--no-stale-gate", no_stale_gate,
                     "skip the artifact-freshness condition");

  // ---- test ----
  auto* cmd_test = app.add_subcommand("test", "execute test cases");
  cmd_test->require_subcommand(1);
  auto* test_mil = cmd_test->add_subcommand("mil", "run against the model");
  std::string mil_case, mil_model = "amds", mil_out;
  test_mil->add_option("--case", mil_case, "test case file (.tc)")->required();
  test_mil->add_option("--model", mil_model);
  test_mil->add_option("--out", mil_out, "write the run record XML here");
  auto* test_hil =
      cmd_test->add_subcommand("hil", "replay against a target over UDP");
  std::string hil_case, hil_model = "amds", hil_out, hil_host = "127.0.0.1";
  unsigned hil_port = kDefaultHilPort, hil_timeout = 500, hil_local_port = 0;
  test_hil->add_option("--case", hil_case)->required();
  test_hil->add_option("--model", hil_model,
                       "model name (defines the signal interface)");
  test_hil->add_option("--host", hil_host);
  test_hil->add_option("--port", hil_port);
  test_hil->add_option("--timeout", hil_timeout, "per-frame timeout in ms");
  test_hil->add_option("--local-port", hil_local_port,
                       "bind the client to a fixed local port");
  test_hil->add_option("--out", hil_out);

  // ---- target ----
  auto* cmd_target = app.add_subcommand("target", "HIL target");
  cmd_target->require_subcommand(1);
  auto* target_serve =
      cmd_target->add_subcommand("serve", "serve a model over UDP lockstep");
  std::string serve_model = "amds";
  unsigned serve_port = kDefaultHilPort;
  target_serve->add_option("--model", serve_model,
                           "e.g. amds, amds:delay=15, amds:ch1-stuck");
  target_serve->add_option("--port", serve_port);

  // ---- compare ----
  auto* cmd_compare =
      app.add_subcommand("compare", "equivalence of two run-record files");
  std::string compare_a, compare_b;
  double compare_tolerance = 0.0;
  cmd_compare->add_option("record_a", compare_a)->required();
  cmd_compare->add_option("record_b", compare_b)->required();
  cmd_compare->add_option("--tolerance", compare_tolerance);

  // ---- ingest ----
  auto* cmd_ingest =
      app.add_subcommand("ingest", "import test-run records into the store");
  std::string ingest_file;
  cmd_ingest->add_option("file", ingest_file, "records XML")->required();

  // ---- objective ----
  auto* cmd_objective = app.add_subcommand("objective", "objective catalog");
  cmd_objective->require_subcommand(1);
  auto* objective_set =
      cmd_objective->add_subcommand("set", "set compliance status");
  std::string obj_id, obj_status, obj_rationale, obj_catalog = "catalog.csv";
  objective_set->add_option("id", obj_id)->required();
  objective_set->add_option("--status", obj_status, "Full, Partial or NA")
      ->required();
  objective_set->add_option("--rationale", obj_rationale);
  objective_set->add_option("--catalog", obj_catalog);

  // let --project / --format appear after the subcommand too
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands(
             [](const CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  FormatChoice format = parse_format(format_text);

  // ---------- project-independent commands ----------

  if (test_mil->parsed()) {
    TestCase testcase = load_testcase(mil_case);
    auto model = make_model(mil_model);
    TestRunRecord record = run_mil(*model, testcase);
    if (!mil_out.empty())
      write_file_atomic(mil_out, render_run_records({record}));
    std::cout << "case " << record.case_id << ": "
              << verdict_name(record.verdict) << "\n";
    for (const auto& r : record.latency) {
      std::cout << "  expect " << r.expectation.signal << " at t="
                << r.step_time_ms << ": "
                << (r.satisfied ? "ok" : "unsatisfied");
      if (r.achieved_at_ms)
        std::cout << " (achieved at t=" << *r.achieved_at_ms << ")";
      std::cout << "\n";
    }
    return record.verdict == Verdict::pass ? kExitOk : kExitPolicy;
  }

  if (test_hil->parsed()) {
    TestCase testcase = load_testcase(hil_case);
    auto model = make_model(hil_model);
    HilClient client(hil_host, static_cast<std::uint16_t>(hil_port),
                     hil_timeout, static_cast<std::uint16_t>(hil_local_port));
    TestRunRecord record = client.run(model->signals(), testcase);
    if (!hil_out.empty())
      write_file_atomic(hil_out, render_run_records({record}));
    std::cout << "case " << record.case_id << ": "
              << verdict_name(record.verdict);
    if (!record.note.empty()) std::cout << " (" << record.note << ")";
    std::cout << "\n";
    if (record.verdict == Verdict::error) return kExitIo;
    return record.verdict == Verdict::pass ? kExitOk : kExitPolicy;
  }

  if (target_serve->parsed()) {
    auto model = make_model(serve_model);
    HilTarget target(*model, static_cast<std::uint16_t>(serve_port));
    g_serving_target = &target;
    std::signal(SIGINT, handle_stop_signal);
    std::signal(SIGTERM, handle_stop_signal);
    std::cout << "serving " << serve_model << " on UDP port " << target.port()
              << "\n"
              << std::flush;
    target.serve();
    return kExitOk;
  }

  if (cmd_compare->parsed()) {
    auto runs_a = load_run_records(compare_a);
    auto runs_b = load_run_records(compare_b);
    if (runs_a.size() != 1 || runs_b.size() != 1)
      fail_usage("compare expects exactly one run per file; use the "
                 "compare-mil-hil job action for batches");
    EquivalenceVerdict verdict =
        compare_runs(runs_a[0].record, runs_b[0].record, compare_tolerance);
    if (verdict.equivalent) {
      std::cout << "equivalent\n";
      return kExitOk;
    }
    std::cout << "divergent (" << verdict.divergences.size() << " samples)\n";
    size_t shown = 0;
    for (const auto& d : verdict.divergences) {
      if (++shown > 10) {
        std::cout << "  ...\n";
        break;
      }
      std::cout << "  t=" << d.time_ms << " " << d.signal << ": "
                << format_double(d.a) << " vs " << format_double(d.b) << "\n";
    }
    return kExitPolicy;
  }

  if (cmd_lint->parsed() && !lint_text.empty()) {
    LintResult result = lint_requirement(lint_text);
    std::cout << (result.conformant() ? "conformant" : "nonconformant")
              << "\n";
    for (const auto& d : result.diagnostics) std::cout << "  " << d << "\n";
    if (result.parts && result.parts->timing_value)
      std::cout << "  timing: " << *result.parts->timing_value << " "
                << result.parts->timing_unit << "\n";
    return kExitOk;
  }

  // ---------- project commands ----------

  if (cmd_init->parsed()) {
    fs::path path = init_path.empty() ? fs::path(project_dir) : fs::path(init_path);
    LevelScheme levels = init_levels.empty()
                             ? LevelScheme::standard()
                             : LevelScheme(split_list(init_levels, ','));
    Project project = Project::init(path, levels);
    write_file_atomic(project.root() / "jobs.cfg", sample_jobs_cfg());
    write_file_atomic(project.root() / "catalog.csv", Catalog::sample_csv());
    std::cout << "initialized project in " << project.root().string() << "\n";
    return kExitOk;
  }

  bool mutating = cmd_add->parsed() || cmd_edit->parsed() ||
                  cmd_link->parsed() || cmd_reviewed->parsed() ||
                  cmd_baseline->parsed() || cmd_ingest->parsed() ||
                  jobs_run->parsed() || objective_set->parsed();
  Project project = Project::open(
      project_dir, mutating ? OpenMode::read_write : OpenMode::read_only);
  Store store(project);
  Trace trace(project, store);

  if (cmd_add->parsed()) {
    std::string body = add_body;
    if (!add_body_file.empty()) body = read_file(add_body_file);
    WorkItem item = store.create_item(
        parse_kind_arg(add_kind),
        add_level.empty() ? std::nullopt : std::optional(add_level), add_title,
        body, add_derived, parse_field_args(add_fields));
    std::cout << item.id.str() << " rev " << item.revision << "\n";
    return kExitOk;
  }

  if (cmd_edit->parsed()) {
    FieldChanges changes;
    changes.title = edit_title;
    changes.body = edit_body;
    changes.level = edit_level;
    if (edit_derived) {
      if (*edit_derived != "true" && *edit_derived != "false")
        fail_usage("--derived expects true or false");
      changes.derived = (*edit_derived == "true");
    }
    changes.set_fields = parse_field_args(edit_fields);
    changes.unset_fields = edit_unset;
    if (changes.empty()) fail_usage("nothing to change");
    WorkItem item = store.update_item(parse_id_arg(edit_id), changes);
    std::cout << item.id.str() << " rev " << item.revision << "\n";
    return kExitOk;
  }

  if (cmd_show->parsed()) {
    WorkItem item = store.get_item(parse_id_arg(show_id));
    std::cout << item.id.str() << " [" << item_kind_name(item.kind) << "]";
    if (!item.level.empty()) std::cout << " level=" << item.level;
    if (item.derived) std::cout << " derived";
    std::cout << " rev " << item.revision << "\n";
    std::cout << "title: " << item.title << "\n";
    for (const auto& [k, v] : item.custom_fields)
      std::cout << k << ": " << v << "\n";
    if (!item.body.empty()) std::cout << "\n" << item.body << "\n";
    return kExitOk;
  }

  if (cmd_link->parsed()) {
    Link link = trace.add_link(parse_id_arg(link_source),
                               parse_role_arg(link_role),
                               parse_id_arg(link_target));
    std::cout << link.source << " " << link_role_name(link.role) << " "
              << link.target << "\n";
    return kExitOk;
  }

  if (cmd_suspects->parsed()) {
    for (const auto& link : trace.suspect_links())
      std::cout << link.source << " " << link_role_name(link.role) << " "
                << link.target << "\n";
    return kExitOk;
  }

  if (cmd_reviewed->parsed()) {
    trace.mark_link_reviewed(parse_id_arg(rev_source),
                             parse_role_arg(rev_role),
                             parse_id_arg(rev_target));
    std::cout << "reviewed\n";
    return kExitOk;
  }

  if (cmd_lint->parsed()) {
    if (lint_item.empty()) fail_usage("lint needs --text or --item");
    WorkItem item = store.get_item(parse_id_arg(lint_item));
    LintResult result = lint_requirement(item.body);
    std::cout << item.id.str() << ": "
              << (result.conformant() ? "conformant" : "nonconformant")
              << "\n";
    for (const auto& d : result.diagnostics) std::cout << "  " << d << "\n";
    return kExitOk;
  }

  if (cmd_baseline->parsed()) {
    Baseline bl = store.make_baseline(baseline_label);
    std::cout << "baseline '" << bl.label << "' with "
              << bl.item_digests.size() << " items\n";
    return kExitOk;
  }

  if (cmd_diff->parsed()) {
    BaselineDiff d = store.diff(diff_a, diff_b);
    for (const auto& id : d.added) std::cout << "added: " << id << "\n";
    for (const auto& id : d.removed) std::cout << "removed: " << id << "\n";
    for (const auto& id : d.modified) std::cout << "modified: " << id << "\n";
    if (d.empty()) std::cout << "no changes\n";
    return kExitOk;
  }

  if (report_trace->parsed()) {
    SourceFilter filter;
    filter.kind = parse_kind_arg(trace_kind);
    if (!trace_level.empty()) filter.level = trace_level;
    LinkRole role = parse_role_arg(trace_role);
    std::string dir_text = to_lower(trace_direction);
    if (dir_text != "outgoing" && dir_text != "incoming")
      fail_usage("--direction must be outgoing or incoming");
    Direction direction =
        dir_text == "outgoing" ? Direction::outgoing : Direction::incoming;
    TraceReport report = trace.coverage(filter, role, direction);
    std::string stem = "trace_" + to_lower(link_role_name(role)) + "_" +
                       dir_text;
    if (!trace_level.empty()) stem += "_" + trace_level;
    if (*filter.kind != ItemKind::Requirement)
      stem += "_" + to_lower(item_kind_name(*filter.kind));
    write_report_pair(project, stem, format, render_trace_report_csv(report),
                      render_trace_report_html(report));
    std::cout << "covered: " << report.covered
              << ", uncovered: " << report.uncovered
              << ", justified: " << report.justified << "\n";
    return kExitOk;
  }

  if (report_status->parsed() || jobs_status->parsed()) {
    JobEngine engine(project, default_action_registry());
    auto states = engine.status();
    if (report_status->parsed()) {
      write_report_pair(project, "status", format, render_status_csv(states),
                        render_status_html(states, engine.jobs()));
    }
    for (const auto& [artifact, state] : states)
      std::cout << artifact << ": " << artifact_state_name(state) << "\n";
    return kExitOk;
  }

  if (report_compliance->parsed()) {
    Catalog catalog = Catalog::load(project.resolve(compliance_catalog));
    catalog.select_subset(compliance_threshold);
    if (compliance_level.size() != 1)
      fail_usage("--level must be A, B, C or D");
    char level = static_cast<char>(std::toupper(compliance_level[0]));
    for (Standard standard : catalog.standards()) {
      MatrixReport report = catalog.matrix(standard, level);
      std::string stem =
          "compliance_" + standard_name(standard) + "_" + std::string(1, level);
      write_report_pair(project, stem, format, render_matrix_csv(report),
                        render_matrix_html(report));
    }
    return kExitOk;
  }

  if (jobs_run->parsed() || jobs_plan->parsed()) {
    JobEngine engine(project, default_action_registry());
    auto plan = engine.plan();
    if (jobs_plan->parsed()) {
      for (const auto& name : plan) std::cout << name << "\n";
      std::cout << "(" << plan.size() << " of " << engine.jobs().size()
                << " jobs)\n";
      return kExitOk;
    }
    RunResults results = engine.run(plan);
    for (const auto& r : results.results) {
      std::cout << r.name << ": " << job_run_status_name(r.status) << " ("
                << r.duration_ms << " ms)";
      if (!r.message.empty()) std::cout << " - " << r.message;
      std::cout << "\n";
    }
    std::cout << results.executed() << " executed, "
              << results.results.size() - results.executed() << " blocked\n";
    return results.all_passed() ? kExitOk : kExitPolicy;
  }

  if (jobs_impact->parsed()) {
    JobEngine engine(project, default_action_registry());
    ImpactResult impact = engine.impact_analysis(impact_paths);
    for (const auto& job : impact.jobs) std::cout << "job: " << job << "\n";
    for (const auto& artifact : impact.artifacts)
      std::cout << "artifact: " << artifact << "\n";
    return kExitOk;
  }

  if (cmd_gate->parsed()) {
    JobEngine engine(project, default_action_registry());
    GateOptions options;
    options.trace_gate = !no_trace_gate;
    options.stale_gate = !no_stale_gate;
    GateReport report = evaluate_gate(project, store, trace, engine, options);
    std::cout << report.summary();
    return report.pass() ? kExitOk : kExitPolicy;
  }

  if (cmd_ingest->parsed()) {
    IngestResult result = ingest_records(store, trace, ingest_file);
    std::cout << "created " << result.created.size() << " test runs, skipped "
              << result.skipped << "\n";
    for (const auto& id : result.created) std::cout << "  " << id.str() << "\n";
    return kExitOk;
  }

  if (objective_set->parsed()) {
    auto status = parse_compliance_status(obj_status);
    if (!status) fail_usage("--status must be Full, Partial or NA");
    fs::path catalog_path = project.resolve(obj_catalog);
    Catalog catalog = Catalog::load(catalog_path);
    catalog.set_status(obj_id, *status, obj_rationale);
    catalog.save(catalog_path);
    std::cout << obj_id << ": " << compliance_status_name(*status) << "\n";
    return kExitOk;
  }

  fail_usage("no command matched");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_command(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
