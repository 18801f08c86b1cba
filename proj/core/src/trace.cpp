/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/trace.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "certkit/errors.hpp"
#include "certkit/util.hpp"

namespace certkit {

const std::vector<LinkRole>& all_link_roles() {
  static const std::vector<LinkRole> roles = {
      LinkRole::Refines, LinkRole::Implements, LinkRole::Verifies,
      LinkRole::Records, LinkRole::Justifies,
  };
  return roles;
}

std::string link_role_name(LinkRole role) {
  switch (role) {
    case LinkRole::Refines:
      return "Refines";
    case LinkRole::Implements:
      return "Implements";
    case LinkRole::Verifies:
      return "Verifies";
    case LinkRole::Records:
      return "Records";
    case LinkRole::Justifies:
      return "Justifies";
  }
  return "?";
}

std::optional<LinkRole> parse_link_role(std::string_view name) {
  std::string n = to_lower(name);
  for (LinkRole role : all_link_roles())
    if (to_lower(link_role_name(role)) == n) return role;
  return std::nullopt;
}

std::string coverage_status_name(CoverageStatus status) {
  switch (status) {
    case CoverageStatus::covered:
      return "covered";
    case CoverageStatus::uncovered:
      return "uncovered";
    case CoverageStatus::justified:
      return "justified";
  }
  return "?";
}

bool link_role_allows(LinkRole role, ItemKind source, ItemKind target) {
  switch (role) {
    case LinkRole::Refines:
      return source == ItemKind::Requirement && target == ItemKind::Requirement;
    case LinkRole::Implements:
      return source == ItemKind::ModelSurrogate &&
             target == ItemKind::Requirement;
    case LinkRole::Verifies:
      return source == ItemKind::TestCaseSurrogate &&
             target == ItemKind::Requirement;
    case LinkRole::Records:
      return source == ItemKind::TestRun &&
             target == ItemKind::TestCaseSurrogate;
    case LinkRole::Justifies:
      return source == ItemKind::ReviewChecklist;
  }
  return false;
}

Trace::Trace(Project& project, Store& store)
    : project_(&project), store_(&store) {}

std::vector<Link> Trace::links() const {
  std::vector<Link> out;
  if (!std::filesystem::exists(project_->links_file())) return out;
  std::string content = read_file(project_->links_file());
  int line_no = 0;
  for (const auto& line : split(content, '\n')) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cols = split(line, '\t');
    if (cols.size() != 5)
      fail_usage("links.tsv:" + std::to_string(line_no) +
                 ": expected 5 tab-separated columns");
    auto role = parse_link_role(cols[1]);
    auto src_rev = parse_int(cols[3]);
    auto tgt_rev = parse_int(cols[4]);
    if (!role || !src_rev || !tgt_rev || *src_rev < 0 || *tgt_rev < 0)
      fail_usage("links.tsv:" + std::to_string(line_no) + ": malformed link");
    out.push_back(Link{cols[0], *role, cols[2],
                       static_cast<unsigned>(*src_rev),
                       static_cast<unsigned>(*tgt_rev)});
  }
  return out;
}

void Trace::save_links(const std::vector<Link>& links) const {
  std::string out;
  for (const auto& l : links) {
    out += l.source + "\t" + link_role_name(l.role) + "\t" + l.target + "\t" +
           std::to_string(l.recorded_source_rev) + "\t" +
           std::to_string(l.recorded_target_rev) + "\n";
  }
  write_file_atomic(project_->links_file(), out);
}

Link Trace::add_link(const WorkItemId& source, LinkRole role,
                     const WorkItemId& target) {
  if (!project_->writable())
    fail_usage("project opened read-only; mutation refused");
  WorkItem src = store_->get_item(source);
  WorkItem tgt = store_->get_item(target);
  if (!link_role_allows(role, src.kind, tgt.kind))
    fail_usage("role " + link_role_name(role) + " does not permit " +
               item_kind_name(src.kind) + " -> " + item_kind_name(tgt.kind));
  if (role == LinkRole::Refines) {
    const LevelScheme& levels = project_->config().levels;
    // a requirement may refine one at the same or a higher level
    if (levels.index_of(tgt.level) > levels.index_of(src.level))
      fail_usage("Refines must point to the same or a higher level (" +
                 src.level + " -> " + tgt.level + ")");
  }
  auto existing = links();
  for (const auto& l : existing)
    if (l.source == source.str() && l.role == role && l.target == target.str())
      fail_usage("duplicate link: " + source.str() + " " +
                 link_role_name(role) + " " + target.str());

  Link link{source.str(), role, target.str(), src.revision, tgt.revision};
  existing.push_back(link);
  save_links(existing);
  return link;
}

bool Trace::is_suspect(const Link& link) const {
  auto src = WorkItemId::parse(link.source);
  auto tgt = WorkItemId::parse(link.target);
  if (!src || !tgt) return true;
  auto src_item = store_->find_item(*src);
  auto tgt_item = store_->find_item(*tgt);
  // a missing endpoint is treated as changed
  if (!src_item || !tgt_item) return true;
  return src_item->revision > link.recorded_source_rev ||
         tgt_item->revision > link.recorded_target_rev;
}

std::vector<Link> Trace::suspect_links() const {
  std::vector<Link> out;
  for (const auto& l : links())
    if (is_suspect(l)) out.push_back(l);
  return out;
}

Link Trace::mark_link_reviewed(const WorkItemId& source, LinkRole role,
                               const WorkItemId& target) {
  if (!project_->writable())
    fail_usage("project opened read-only; mutation refused");
  auto all = links();
  for (auto& l : all) {
    if (l.source == source.str() && l.role == role &&
        l.target == target.str()) {
      l.recorded_source_rev = store_->get_item(source).revision;
      l.recorded_target_rev = store_->get_item(target).revision;
      save_links(all);
      return l;
    }
  }
  fail_usage("unknown link: " + source.str() + " " + link_role_name(role) +
             " " + target.str());
}

TraceReport Trace::coverage(const SourceFilter& filter, LinkRole role,
                            Direction direction) const {
  TraceReport report;
  report.filter = filter;
  report.role = role;
  report.direction = direction;

  std::vector<WorkItem> items = store_->list_items();
  std::erase_if(items, [&](const WorkItem& i) {
    if (filter.kind && i.kind != *filter.kind) return true;
    if (filter.level && i.level != *filter.level) return true;
    return false;
  });

  std::set<std::string> linked;
  for (const auto& l : links()) {
    if (l.role != role) continue;
    linked.insert(direction == Direction::outgoing ? l.source : l.target);
  }

  for (const auto& item : items) {
    TraceRow row;
    row.id = item.id.str();
    if (linked.count(row.id)) {
      row.status = CoverageStatus::covered;
    } else if (item.kind == ItemKind::Requirement && item.derived &&
               role == LinkRole::Refines && direction == Direction::outgoing) {
      row.status = CoverageStatus::justified;
    } else {
      row.status = CoverageStatus::uncovered;
    }
    switch (row.status) {
      case CoverageStatus::covered:
        ++report.covered;
        break;
      case CoverageStatus::uncovered:
        ++report.uncovered;
        break;
      case CoverageStatus::justified:
        ++report.justified;
        break;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::set<std::string> Trace::impact_set(const WorkItemId& id) const {
  if (!store_->exists(id)) fail_usage("unknown work item: " + id.str());
  std::multimap<std::string, std::string> adjacency;
  for (const auto& l : links()) {
    adjacency.emplace(l.source, l.target);
    adjacency.emplace(l.target, l.source);
  }
  std::set<std::string> seen{id.str()};
  std::deque<std::string> queue{id.str()};
  while (!queue.empty()) {
    std::string current = queue.front();
    queue.pop_front();
    auto [lo, hi] = adjacency.equal_range(current);
    for (auto it = lo; it != hi; ++it) {
      if (seen.insert(it->second).second) queue.push_back(it->second);
    }
  }
  seen.erase(id.str());
  return seen;
}

// ---- report rendering ----

std::string render_trace_report_csv(const TraceReport& report) {
  std::string out = "id,status\n";
  for (const auto& row : report.rows)
    out += row.id + "," + coverage_status_name(row.status) + "\n";
  return out;
}

std::string render_trace_report_html(const TraceReport& report) {
  std::string title = "Trace report: " + link_role_name(report.role) + " (" +
                      (report.direction == Direction::outgoing ? "outgoing"
                                                               : "incoming") +
                      ")";
  std::string filter;
  if (report.filter.kind) filter += item_kind_name(*report.filter.kind);
  if (report.filter.level) {
    if (!filter.empty()) filter += ", ";
    filter += "level " + *report.filter.level;
  }
  if (filter.empty()) filter = "all items";

  std::string out;
  out += "<!doctype html>\n<html><head><meta charset=\"utf-8\">\n<title>" +
         html_escape(title) + "</title>\n";
  out += "<style>body{font-family:sans-serif}table{border-collapse:collapse}"
         "td,th{border:1px solid #999;padding:4px 10px}"
         ".covered{background:#d4edc9}.uncovered{background:#f3c6c6}"
         ".justified{background:#cfe2f3}</style></head>\n<body>\n";
  out += "<h1>" + html_escape(title) + "</h1>\n";
  out += "<p>Scope: " + html_escape(filter) + "</p>\n";
  out += "<table>\n<tr><th>item</th><th>status</th></tr>\n";
  for (const auto& row : report.rows) {
    std::string status = coverage_status_name(row.status);
    out += "<tr class=\"" + status + "\"><td>" + html_escape(row.id) +
           "</td><td>" + status + "</td></tr>\n";
  }
  out += "</table>\n";
  out += "<p class=\"summary\">covered: " + std::to_string(report.covered) +
         ", uncovered: " + std::to_string(report.uncovered) +
         ", justified: " + std::to_string(report.justified) + "</p>\n";
  out += "</body></html>\n";
  return out;
}

}  // namespace certkit
