/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "certkit/store.hpp"

namespace certkit {

enum class LinkRole { Refines, Implements, Verifies, Records, Justifies };

const std::vector<LinkRole>& all_link_roles();
std::string link_role_name(LinkRole role);
std::optional<LinkRole> parse_link_role(std::string_view name);

/// Directed typed edge between work items. The revisions of both endpoints
/// are recorded when the link is created or reviewed; the link is suspect as
/// soon as either endpoint moves past its recorded revision.
struct Link {
  std::string source;
  LinkRole role = LinkRole::Refines;
  std::string target;
  unsigned recorded_source_rev = 0;
  unsigned recorded_target_rev = 0;
};

enum class Direction { outgoing, incoming };

enum class CoverageStatus { covered, uncovered, justified };
std::string coverage_status_name(CoverageStatus status);

struct SourceFilter {
  std::optional<ItemKind> kind;
  std::optional<std::string> level;
};

struct TraceRow {
  std::string id;
  CoverageStatus status = CoverageStatus::uncovered;
};

struct TraceReport {
  SourceFilter filter;
  LinkRole role = LinkRole::Refines;
  Direction direction = Direction::outgoing;
  std::vector<TraceRow> rows;  // sorted by id
  size_t covered = 0;
  size_t uncovered = 0;
  size_t justified = 0;
};

/// Typed link management over the store, persisted in `links.tsv`
/// (tab-separated `source role target src_rev tgt_rev` lines).
class Trace {
 public:
  Trace(Project& project, Store& store);

  /// Validates the role legality matrix (including the Refines level rule:
  /// the target level must be the same or higher) and records current
  /// endpoint revisions.
  Link add_link(const WorkItemId& source, LinkRole role,
                const WorkItemId& target);

  std::vector<Link> links() const;
  std::vector<Link> suspect_links() const;
  bool is_suspect(const Link& link) const;

  /// Re-records current endpoint revisions, clearing suspicion.
  Link mark_link_reviewed(const WorkItemId& source, LinkRole role,
                          const WorkItemId& target);

  /// Trace coverage of the items selected by `filter`. Suspect links still
  /// count as covering; a derived requirement with no outgoing Refines link
  /// is justified rather than uncovered.
  TraceReport coverage(const SourceFilter& filter, LinkRole role,
                       Direction direction) const;

  /// Everything transitively connected to `id` over links in either
  /// direction, excluding `id` itself.
  std::set<std::string> impact_set(const WorkItemId& id) const;

 private:
  void save_links(const std::vector<Link>& links) const;

  Project* project_;
  Store* store_;
};

/// True when `role` may connect an item of kind `source` to one of kind
/// `target` (level rules aside).
bool link_role_allows(LinkRole role, ItemKind source, ItemKind target);

std::string render_trace_report_csv(const TraceReport& report);
std::string render_trace_report_html(const TraceReport& report);

}  // namespace certkit
