/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/store.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "certkit/digest.hpp"
#include "certkit/errors.hpp"
#include "certkit/kvfile.hpp"
#include "certkit/util.hpp"

namespace certkit {

namespace fs = std::filesystem;

std::string WorkItemId::str() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s-%04u", prefix.c_str(), ordinal);
  return buf;
}

std::optional<WorkItemId> WorkItemId::parse(std::string_view text) {
  size_t dash = text.rfind('-');
  if (dash == std::string_view::npos || dash == 0 || dash + 1 >= text.size())
    return std::nullopt;
  std::string_view prefix = text.substr(0, dash);
  std::string_view digits = text.substr(dash + 1);
  if (digits.size() < 4) return std::nullopt;
  auto ordinal = parse_int(digits);
  if (!ordinal || *ordinal <= 0) return std::nullopt;
  if (!is_safe_label(prefix)) return std::nullopt;
  return WorkItemId{std::string(prefix), static_cast<unsigned>(*ordinal)};
}

std::string WorkItem::content_digest() const {
  // canonical serialization: sorted keys, escaped single-line values
  std::string canon;
  canon += "body: " + escape_line(body) + "\n";
  for (const auto& [k, v] : custom_fields)
    canon += "custom." + k + ": " + escape_line(v) + "\n";
  canon += std::string("derived: ") + (derived ? "true" : "false") + "\n";
  canon += "kind: " + item_kind_name(kind) + "\n";
  canon += "level: " + level + "\n";
  canon += "title: " + escape_line(title) + "\n";
  return sha256_hex(canon);
}

// ---- item file io ----

namespace {

constexpr std::string_view kFieldPrefix = "field.";

void validate_field_key(const std::string& key) {
  if (!is_safe_label(key))
    fail_usage("invalid custom field name: '" + key + "'");
}

std::string render_item(const WorkItem& item) {
  KvBlock block;
  block.set("id", item.id.str());
  block.set("kind", item_kind_name(item.kind));
  if (!item.level.empty()) block.set("level", item.level);
  block.set("title", item.title);
  if (item.kind == ItemKind::Requirement)
    block.set("derived", item.derived ? "true" : "false");
  block.set("revision", std::to_string(item.revision));
  for (const auto& [k, v] : item.custom_fields)
    block.set(std::string(kFieldPrefix) + k, v);
  block.body = item.body;
  return render_kv_block(block);
}

WorkItem parse_item(const std::string& content, const std::string& source) {
  KvBlock block = parse_kv_block(content, source);
  WorkItem item;
  auto id_text = block.get("id");
  if (!id_text) fail_usage(source + ": missing id");
  auto id = WorkItemId::parse(*id_text);
  if (!id) fail_usage(source + ": bad id '" + *id_text + "'");
  item.id = *id;
  auto kind = parse_item_kind(block.get_or("kind", ""));
  if (!kind) fail_usage(source + ": bad kind");
  item.kind = *kind;
  item.level = block.get_or("level", "");
  item.title = block.get_or("title", "");
  item.derived = block.get_or("derived", "false") == "true";
  auto rev = parse_int(block.get_or("revision", ""));
  if (!rev || *rev < 0) fail_usage(source + ": bad revision");
  item.revision = static_cast<unsigned>(*rev);
  for (const auto& [k, v] : block.entries)
    if (starts_with(k, kFieldPrefix))
      item.custom_fields[k.substr(kFieldPrefix.size())] = v;
  item.body = block.body;
  return item;
}

}  // namespace

// ---- store ----

Store::Store(Project& project) : project_(&project) {}

void Store::require_writable() const {
  if (!project_->writable())
    fail_usage("project opened read-only; mutation refused");
}

unsigned Store::next_ordinal(const std::string& prefix) {
  // counters keeps the highest ordinal ever assigned per prefix; entries
  // are never lowered, so ordinals are never reused after deletion
  std::map<std::string, unsigned> counters;
  std::string content = read_file(project_->counters_file());
  for (const auto& line : split(content, '\n')) {
    if (trim(line).empty()) continue;
    auto parts = split_list(line, ' ');
    if (parts.size() != 2) fail_usage("counters: malformed line '" + line + "'");
    auto n = parse_int(parts[1]);
    if (!n || *n < 0) fail_usage("counters: bad ordinal in '" + line + "'");
    counters[parts[0]] = static_cast<unsigned>(*n);
  }
  unsigned next = counters[prefix] + 1;
  counters[prefix] = next;
  std::string out;
  for (const auto& [p, n] : counters)
    out += p + " " + std::to_string(n) + "\n";
  write_file_atomic(project_->counters_file(), out);
  return next;
}

void Store::save_item(const WorkItem& item) const {
  fs::path file = project_->items_dir() / (item.id.str() + ".wi");
  write_file_atomic(file, render_item(item));
}

WorkItem Store::create_item(ItemKind kind, std::optional<std::string> level,
                            std::string title, std::string body, bool derived,
                            std::map<std::string, std::string> custom_fields) {
  require_writable();
  if (kind == ItemKind::Requirement) {
    if (!level || level->empty())
      fail_usage("requirements need a level label");
    if (!project_->config().levels.contains(*level))
      fail_usage("unknown level: '" + *level + "'");
  } else {
    if (level && !level->empty())
      fail_usage("level is only valid for requirements");
    if (derived) fail_usage("derived flag is only valid for requirements");
  }
  for (const auto& [k, v] : custom_fields) validate_field_key(k);

  WorkItem item;
  item.kind = kind;
  item.level = level.value_or("");
  item.title = std::move(title);
  item.body = std::move(body);
  item.derived = derived;
  item.custom_fields = std::move(custom_fields);
  item.revision = 0;

  std::string prefix = project_->config().prefix_for(kind);
  item.id = WorkItemId{prefix, next_ordinal(prefix)};
  save_item(item);
  return item;
}

WorkItem Store::update_item(const WorkItemId& id, const FieldChanges& changes) {
  require_writable();
  WorkItem item = get_item(id);
  if (changes.level) {
    if (item.kind != ItemKind::Requirement)
      fail_usage("level is only valid for requirements");
    if (!project_->config().levels.contains(*changes.level))
      fail_usage("unknown level: '" + *changes.level + "'");
    item.level = *changes.level;
  }
  if (changes.derived) {
    if (item.kind != ItemKind::Requirement)
      fail_usage("derived flag is only valid for requirements");
    item.derived = *changes.derived;
  }
  if (changes.title) item.title = *changes.title;
  if (changes.body) item.body = *changes.body;
  for (const auto& [k, v] : changes.set_fields) {
    validate_field_key(k);
    item.custom_fields[k] = v;
  }
  for (const auto& k : changes.unset_fields) item.custom_fields.erase(k);

  item.revision += 1;
  save_item(item);
  return item;
}

std::optional<WorkItem> Store::find_item(const WorkItemId& id) const {
  fs::path file = project_->items_dir() / (id.str() + ".wi");
  if (!fs::exists(file)) return std::nullopt;
  return parse_item(read_file(file), file.string());
}

WorkItem Store::get_item(const WorkItemId& id) const {
  auto item = find_item(id);
  if (!item) fail_usage("unknown work item: " + id.str());
  return *item;
}

bool Store::exists(const WorkItemId& id) const {
  return fs::exists(project_->items_dir() / (id.str() + ".wi"));
}

std::vector<WorkItem> Store::list_items() const {
  std::vector<WorkItem> items;
  if (!fs::is_directory(project_->items_dir())) return items;
  for (const auto& entry : fs::directory_iterator(project_->items_dir())) {
    if (!entry.is_regular_file() || entry.path().extension() != ".wi")
      continue;
    items.push_back(
        parse_item(read_file(entry.path()), entry.path().string()));
  }
  std::sort(items.begin(), items.end(),
            [](const WorkItem& a, const WorkItem& b) { return a.id < b.id; });
  return items;
}

std::vector<WorkItem> Store::list_items(ItemKind kind) const {
  std::vector<WorkItem> items = list_items();
  std::erase_if(items, [&](const WorkItem& i) { return i.kind != kind; });
  return items;
}

std::optional<WorkItem> Store::find_by_field(ItemKind kind,
                                             const std::string& field,
                                             const std::string& value) const {
  for (const auto& item : list_items(kind)) {
    auto it = item.custom_fields.find(field);
    if (it != item.custom_fields.end() && it->second == value) return item;
  }
  return std::nullopt;
}

// ---- baselines ----

namespace {

std::string baseline_filename(const std::string& label) {
  if (!is_safe_label(label))
    fail_usage("invalid baseline label: '" + label + "'");
  return label + ".bl";
}

}  // namespace

Baseline Store::make_baseline(const std::string& label) {
  require_writable();
  fs::path file = project_->baselines_dir() / baseline_filename(label);
  if (fs::exists(file)) fail_usage("baseline already exists: '" + label + "'");

  Baseline bl;
  bl.label = label;
  bl.created_at = now_iso8601_utc();
  for (const auto& item : list_items())
    bl.item_digests[item.id.str()] = item.content_digest();

  KvBlock block;
  block.set("label", bl.label);
  block.set("created_at", bl.created_at);
  for (const auto& [id, digest] : bl.item_digests)
    block.body += id + " " + digest + "\n";
  write_file_atomic(file, render_kv_block(block));
  return bl;
}

Baseline Store::load_baseline(const std::string& label) const {
  fs::path file = project_->baselines_dir() / baseline_filename(label);
  if (!fs::exists(file)) fail_usage("unknown baseline: '" + label + "'");
  KvBlock block = parse_kv_block(read_file(file), file.string());
  Baseline bl;
  bl.label = block.get_or("label", label);
  bl.created_at = block.get_or("created_at", "");
  for (const auto& line : split(block.body, '\n')) {
    if (trim(line).empty()) continue;
    auto parts = split_list(line, ' ');
    if (parts.size() != 2)
      fail_usage(file.string() + ": malformed digest line '" + line + "'");
    bl.item_digests[parts[0]] = parts[1];
  }
  return bl;
}

std::vector<std::string> Store::list_baselines() const {
  std::vector<std::string> labels;
  if (!fs::is_directory(project_->baselines_dir())) return labels;
  for (const auto& entry : fs::directory_iterator(project_->baselines_dir()))
    if (entry.is_regular_file() && entry.path().extension() == ".bl")
      labels.push_back(entry.path().stem().string());
  std::sort(labels.begin(), labels.end());
  return labels;
}

BaselineDiff Store::diff(const std::string& label_a,
                         const std::string& label_b) const {
  Baseline a = load_baseline(label_a);
  Baseline b = load_baseline(label_b);
  BaselineDiff d;
  for (const auto& [id, digest] : b.item_digests) {
    auto it = a.item_digests.find(id);
    if (it == a.item_digests.end())
      d.added.push_back(id);
    else if (it->second != digest)
      d.modified.push_back(id);
  }
  for (const auto& [id, digest] : a.item_digests)
    if (!b.item_digests.count(id)) d.removed.push_back(id);
  return d;
}

}  // namespace certkit
