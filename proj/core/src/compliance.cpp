/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/compliance.hpp"

#include <algorithm>
#include <set>

#include "certkit/errors.hpp"
#include "certkit/util.hpp"

namespace certkit {

std::string standard_name(Standard s) {
  return s == Standard::DO178C ? "DO-178C" : "DO-331";
}

std::optional<Standard> parse_standard(std::string_view name) {
  std::string n = to_lower(name);
  if (n == "do-178c" || n == "do178c") return Standard::DO178C;
  if (n == "do-331" || n == "do331") return Standard::DO331;
  return std::nullopt;
}

std::string score_name(Score s) {
  switch (s) {
    case Score::low:
      return "low";
    case Score::medium:
      return "medium";
    case Score::high:
      return "high";
  }
  return "?";
}

std::optional<Score> parse_score(std::string_view name) {
  std::string n = to_lower(name);
  if (n == "low") return Score::low;
  if (n == "medium") return Score::medium;
  if (n == "high") return Score::high;
  return std::nullopt;
}

std::string compliance_status_name(ComplianceStatus s) {
  switch (s) {
    case ComplianceStatus::Full:
      return "Full";
    case ComplianceStatus::Partial:
      return "Partial";
    case ComplianceStatus::NA:
      return "NA";
  }
  return "?";
}

std::optional<ComplianceStatus> parse_compliance_status(
    std::string_view name) {
  std::string n = to_lower(name);
  if (n == "full") return ComplianceStatus::Full;
  if (n == "partial") return ComplianceStatus::Partial;
  if (n == "na" || n == "n/a") return ComplianceStatus::NA;
  return std::nullopt;
}

bool Objective::applicable_at(char level) const {
  for (size_t i = 0; i < kSoftwareLevels.size(); ++i)
    if (kSoftwareLevels[i] == level) return applicability[i];
  fail_usage(std::string("unknown software level: '") + level + "'");
}

bool Objective::applicable_to_all_levels() const {
  return std::all_of(applicability.begin(), applicability.end(),
                     [](bool b) { return b; });
}

int Objective::combined_score() const {
  // objectives applicable at every level count as high importance
  int imp = applicable_to_all_levels() ? static_cast<int>(Score::high)
                                       : static_cast<int>(importance);
  return imp + static_cast<int>(automation) + static_cast<int>(reuse);
}

// ---- catalog ----

std::vector<std::string> Catalog::tables_for(Standard standard) {
  std::vector<std::string> tables;
  std::string prefix = standard == Standard::DO331 ? "MB.A-" : "A-";
  for (int i = 1; i <= 9; ++i) tables.push_back(prefix + std::to_string(i));
  return tables;
}

namespace {

constexpr std::string_view kCsvHeader =
    "standard,table,objective_id,description,appl_A,appl_B,appl_C,appl_D,"
    "importance,automation,reuse,override,status,rationale";

bool parse_applicability_cell(const std::string& cell,
                              const std::string& where) {
  std::string c = to_lower(trim(cell));
  if (c == "x" || c == "yes" || c == "true" || c == "1") return true;
  if (c.empty() || c == "no" || c == "false" || c == "0" || c == "-")
    return false;
  fail_usage(where + ": bad applicability cell '" + cell + "'");
}

}  // namespace

Catalog Catalog::from_csv(std::string_view content,
                          std::string_view source_name) {
  auto rows = parse_csv(content, source_name);
  if (rows.empty())
    fail_usage(std::string(source_name) + ": no tables (empty catalog)");

  size_t first = 0;
  if (!rows[0].empty() && to_lower(rows[0][0]) == "standard") first = 1;

  Catalog catalog;
  std::set<std::string> ids;
  for (size_t r = first; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::string where =
        std::string(source_name) + ":" + std::to_string(r + 1);
    if (row.size() == 1 && trim(row[0]).empty()) continue;
    if (row.size() != 14)
      fail_usage(where + ": expected 14 columns, got " +
                 std::to_string(row.size()));

    Objective o;
    auto standard = parse_standard(trim(row[0]));
    if (!standard) fail_usage(where + ": unknown standard '" + row[0] + "'");
    o.standard = *standard;
    o.table = trim(row[1]);
    auto tables = tables_for(o.standard);
    if (std::find(tables.begin(), tables.end(), o.table) == tables.end())
      fail_usage(where + ": unknown table '" + o.table + "'");
    o.id = trim(row[2]);
    if (!starts_with(o.id, o.table + "."))
      fail_usage(where + ": objective id '" + o.id +
                 "' does not belong to table '" + o.table + "'");
    if (!ids.insert(o.id).second)
      fail_usage(where + ": duplicate objective id '" + o.id + "'");
    o.description = trim(row[3]);
    for (size_t i = 0; i < 4; ++i)
      o.applicability[i] = parse_applicability_cell(row[4 + i], where);

    auto importance = parse_score(trim(row[8]));
    auto automation = parse_score(trim(row[9]));
    auto reuse = parse_score(trim(row[10]));
    if (!importance || !automation || !reuse)
      fail_usage(where + ": scores must be low, medium or high");
    o.importance = *importance;
    o.automation = *automation;
    o.reuse = *reuse;

    std::string override_cell = to_lower(trim(row[11]));
    if (override_cell == "include")
      o.override_ = SelectionOverride::include;
    else if (override_cell == "exclude")
      o.override_ = SelectionOverride::exclude;
    else if (!override_cell.empty())
      fail_usage(where + ": override must be empty, include or exclude");

    std::string status_cell = trim(row[12]);
    if (status_cell.empty()) {
      o.status = ComplianceStatus::Partial;  // not assessed yet
    } else {
      auto status = parse_compliance_status(status_cell);
      if (!status) fail_usage(where + ": bad status '" + status_cell + "'");
      o.status = *status;
    }
    o.rationale = trim(row[13]);

    catalog.objectives_.push_back(std::move(o));
  }
  if (catalog.objectives_.empty())
    fail_usage(std::string(source_name) + ": no tables (no objective rows)");
  return catalog;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path))
    fail_usage("no such catalog file: " + path.string());
  return from_csv(read_file(path), path.string());
}

std::string Catalog::to_csv() const {
  std::string out{kCsvHeader};
  out += '\n';
  for (const auto& o : objectives_) {
    out += csv_escape(standard_name(o.standard)) + ",";
    out += csv_escape(o.table) + ",";
    out += csv_escape(o.id) + ",";
    out += csv_escape(o.description) + ",";
    for (bool a : o.applicability) out += std::string(a ? "x" : "") + ",";
    out += score_name(o.importance) + ",";
    out += score_name(o.automation) + ",";
    out += score_name(o.reuse) + ",";
    switch (o.override_) {
      case SelectionOverride::include:
        out += "include";
        break;
      case SelectionOverride::exclude:
        out += "exclude";
        break;
      case SelectionOverride::none:
        break;
    }
    out += ",";
    out += compliance_status_name(o.status) + ",";
    out += csv_escape(o.rationale) + "\n";
  }
  return out;
}

void Catalog::save(const std::filesystem::path& path) const {
  write_file_atomic(path, to_csv());
}

std::vector<Standard> Catalog::standards() const {
  std::vector<Standard> out;
  for (const auto& o : objectives_)
    if (std::find(out.begin(), out.end(), o.standard) == out.end())
      out.push_back(o.standard);
  std::sort(out.begin(), out.end());
  return out;
}

void Catalog::select_subset(int threshold) {
  if (threshold < 3 || threshold > 9)
    fail_usage("selection threshold must lie in [3, 9]");
  for (auto& o : objectives_) {
    o.selected = o.combined_score() >= threshold;
    if (o.override_ == SelectionOverride::include) o.selected = true;
    if (o.override_ == SelectionOverride::exclude) o.selected = false;
  }
}

Objective& Catalog::set_status(const std::string& objective_id,
                               ComplianceStatus status,
                               const std::string& rationale) {
  for (auto& o : objectives_) {
    if (o.id != objective_id) continue;
    if (status != ComplianceStatus::Full && trim(rationale).empty())
      fail_usage("a rationale is required for Partial and NA");
    o.status = status;
    o.rationale = rationale;
    return o;
  }
  fail_usage("unknown objective: '" + objective_id + "'");
}

const Objective* Catalog::find(const std::string& objective_id) const {
  for (const auto& o : objectives_)
    if (o.id == objective_id) return &o;
  return nullptr;
}

MatrixReport Catalog::matrix(Standard standard, char level) const {
  bool known = false;
  for (char l : kSoftwareLevels) known |= (l == level);
  if (!known)
    fail_usage(std::string("software level must be A, B, C or D, got '") +
               level + "'");

  MatrixReport report;
  report.standard = standard;
  report.level = level;
  for (const auto& table : tables_for(standard)) {
    MatrixRow row;
    row.table = table;
    for (const auto& o : objectives_) {
      if (o.standard != standard || o.table != table) continue;
      if (!o.applicable_at(level)) continue;
      ++row.applicable;
      if (!o.selected) {
        ++row.unselected;
        continue;
      }
      ++row.selected;
      switch (o.status) {
        case ComplianceStatus::Full:
          ++row.full;
          break;
        case ComplianceStatus::Partial:
          ++row.partial;
          break;
        case ComplianceStatus::NA:
          ++row.na;
          break;
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_matrix_csv(const MatrixReport& report) {
  std::string out = "table,applicable,selected,full,partial,na,unselected\n";
  for (const auto& r : report.rows) {
    out += r.table + "," + std::to_string(r.applicable) + "," +
           std::to_string(r.selected) + "," + std::to_string(r.full) + "," +
           std::to_string(r.partial) + "," + std::to_string(r.na) + "," +
           std::to_string(r.unselected) + "\n";
  }
  return out;
}

std::string render_matrix_html(const MatrixReport& report) {
  std::string title = standard_name(report.standard) +
                      " compliance summary, level " + report.level;
  std::string out;
  out += "<!doctype html>\n<html><head><meta charset=\"utf-8\">\n<title>" +
         html_escape(title) + "</title>\n";
  out += "<style>body{font-family:sans-serif}table{border-collapse:collapse}"
         "td,th{border:1px solid #999;padding:4px 10px;text-align:right}"
         "td:first-child,th:first-child{text-align:left}</style></head>\n"
         "<body>\n<h1>" +
         html_escape(title) + "</h1>\n<table>\n";
  out += "<tr><th>table</th><th>applicable</th><th>selected</th><th>full</th>"
         "<th>partial</th><th>n/a</th><th>unselected</th></tr>\n";
  for (const auto& r : report.rows) {
    out += "<tr><td>" + html_escape(r.table) + "</td><td>" +
           std::to_string(r.applicable) + "</td><td>" +
           std::to_string(r.selected) + "</td><td>" + std::to_string(r.full) +
           "</td><td>" + std::to_string(r.partial) + "</td><td>" +
           std::to_string(r.na) + "</td><td>" + std::to_string(r.unselected) +
           "</td></tr>\n";
  }
  out += "</table>\n</body></html>\n";
  return out;
}

}  // namespace certkit
