/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "certkit/project.hpp"

namespace certkit {

/// Identifier of a work item, rendered `<prefix>-<zero-padded ordinal>`,
/// e.g. REQ-0001. Ordinals are assigned strictly increasing per prefix and
/// never reused.
struct WorkItemId {
  std::string prefix;
  unsigned ordinal = 0;

  std::string str() const;
  static std::optional<WorkItemId> parse(std::string_view text);

  auto operator<=>(const WorkItemId&) const = default;
};

struct WorkItem {
  WorkItemId id;
  ItemKind kind = ItemKind::Requirement;
  std::string level;  // requirements only; empty otherwise
  std::string title;
  std::string body;
  bool derived = false;  // requirements only
  std::map<std::string, std::string> custom_fields;
  unsigned revision = 0;

  /// Digest over content fields (kind, level, title, body, derived,
  /// custom_fields); the revision is excluded so baselines compare content,
  /// not edit counts.
  std::string content_digest() const;
};

struct FieldChanges {
  std::optional<std::string> level;
  std::optional<std::string> title;
  std::optional<std::string> body;
  std::optional<bool> derived;
  std::map<std::string, std::string> set_fields;
  std::vector<std::string> unset_fields;

  bool empty() const {
    return !level && !title && !body && !derived && set_fields.empty() &&
           unset_fields.empty();
  }
};

struct Baseline {
  std::string label;
  std::string created_at;
  std::map<std::string, std::string> item_digests;  // id string -> digest
};

struct BaselineDiff {
  std::vector<std::string> added;
  std::vector<std::string> removed;
  std::vector<std::string> modified;

  bool empty() const {
    return added.empty() && removed.empty() && modified.empty();
  }
};

/// File-backed work-item store: one `items/<id>.wi` file per item, a
/// `counters` file carrying the highest ordinal ever assigned per prefix,
/// and `baselines/<label>.bl` snapshots.
class Store {
 public:
  explicit Store(Project& project);

  WorkItem create_item(ItemKind kind, std::optional<std::string> level,
                       std::string title, std::string body,
                       bool derived = false,
                       std::map<std::string, std::string> custom_fields = {});

  WorkItem update_item(const WorkItemId& id, const FieldChanges& changes);

  WorkItem get_item(const WorkItemId& id) const;
  std::optional<WorkItem> find_item(const WorkItemId& id) const;
  bool exists(const WorkItemId& id) const;

  /// All items, sorted by id (prefix, then ordinal).
  std::vector<WorkItem> list_items() const;
  std::vector<WorkItem> list_items(ItemKind kind) const;

  /// First item of `kind` whose custom field `field` equals `value`.
  std::optional<WorkItem> find_by_field(ItemKind kind, const std::string& field,
                                        const std::string& value) const;

  Baseline make_baseline(const std::string& label);
  Baseline load_baseline(const std::string& label) const;
  std::vector<std::string> list_baselines() const;
  BaselineDiff diff(const std::string& label_a,
                    const std::string& label_b) const;

 private:
  void require_writable() const;
  unsigned next_ordinal(const std::string& prefix);
  void save_item(const WorkItem& item) const;

  Project* project_;
};

}  // namespace certkit
