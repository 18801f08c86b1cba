/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/project.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <optional>
#include <set>
#include <string_view>

#include "certkit/errors.hpp"
#include "certkit/kvfile.hpp"
#include "certkit/util.hpp"

namespace certkit {

namespace fs = std::filesystem;

const std::vector<ItemKind>& all_item_kinds() {
  static const std::vector<ItemKind> kinds = {
      ItemKind::Requirement,    ItemKind::ModelSurrogate,
      ItemKind::TestCaseSurrogate, ItemKind::TestRun,
      ItemKind::ReviewChecklist,
  };
  return kinds;
}

std::string item_kind_name(ItemKind kind) {
  switch (kind) {
    case ItemKind::Requirement:
      return "Requirement";
    case ItemKind::ModelSurrogate:
      return "ModelSurrogate";
    case ItemKind::TestCaseSurrogate:
      return "TestCaseSurrogate";
    case ItemKind::TestRun:
      return "TestRun";
    case ItemKind::ReviewChecklist:
      return "ReviewChecklist";
  }
  return "?";
}

std::optional<ItemKind> parse_item_kind(std::string_view name) {
  std::string n = to_lower(name);
  for (ItemKind kind : all_item_kinds())
    if (to_lower(item_kind_name(kind)) == n) return kind;
  return std::nullopt;
}

LevelScheme::LevelScheme(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) fail_usage("level scheme must not be empty");
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty() || !is_safe_label(label))
      fail_usage("invalid level label: '" + label + "'");
    if (!seen.insert(label).second)
      fail_usage("duplicate level label: '" + label + "'");
  }
}

LevelScheme LevelScheme::standard() {
  return LevelScheme({"aircraft", "system", "component", "software"});
}

bool LevelScheme::contains(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

size_t LevelScheme::index_of(std::string_view label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  fail_usage("unknown level label: '" + std::string(label) + "'");
}

ProjectConfig ProjectConfig::defaults() {
  ProjectConfig cfg;
  cfg.prefixes = {
      {ItemKind::Requirement, "REQ"},    {ItemKind::ModelSurrogate, "MDL"},
      {ItemKind::TestCaseSurrogate, "TC"}, {ItemKind::TestRun, "RUN"},
      {ItemKind::ReviewChecklist, "CHK"},
  };
  return cfg;
}

std::string ProjectConfig::prefix_for(ItemKind kind) const {
  auto it = prefixes.find(kind);
  if (it == prefixes.end()) fail_usage("no prefix configured for kind");
  return it->second;
}

// ---- write lock ----

class Project::WriteLock {
 public:
  explicit WriteLock(const fs::path& root) : path_(root / ".lock") {
    int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) {
      if (errno == EEXIST)
        fail_usage("project is already write-locked: " + path_.string() +
                   " (remove the file if the owning process is gone)");
      fail_io("cannot create lock file: " + path_.string());
    }
    std::string pid = std::to_string(::getpid()) + "\n";
    (void)!::write(fd, pid.data(), pid.size());
    ::close(fd);
  }

  ~WriteLock() {
    std::error_code ec;
    fs::remove(path_, ec);
  }

  WriteLock(const WriteLock&) = delete;
  WriteLock& operator=(const WriteLock&) = delete;

 private:
  fs::path path_;
};

// ---- config file ----

namespace {

std::string render_config(const ProjectConfig& cfg) {
  KvBlock block;
  std::string levels;
  for (const auto& label : cfg.levels.labels()) {
    if (!levels.empty()) levels += ',';
    levels += label;
  }
  block.set("levels", levels);
  for (ItemKind kind : all_item_kinds())
    block.set("prefix." + item_kind_name(kind), cfg.prefix_for(kind));
  return render_kv_block(block);
}

ProjectConfig load_config(const fs::path& file) {
  KvBlock block = parse_kv_block(read_file(file), file.string());
  ProjectConfig cfg = ProjectConfig::defaults();
  auto levels = block.get("levels");
  if (!levels) fail_usage(file.string() + ": missing 'levels'");
  cfg.levels = LevelScheme(split_list(*levels, ','));
  std::set<std::string> prefixes_seen;
  for (ItemKind kind : all_item_kinds()) {
    auto p = block.get("prefix." + item_kind_name(kind));
    if (p) {
      if (p->empty() || !is_safe_label(*p))
        fail_usage(file.string() + ": invalid prefix '" + *p + "'");
      cfg.prefixes[kind] = *p;
    }
    if (!prefixes_seen.insert(cfg.prefixes[kind]).second)
      fail_usage(file.string() + ": duplicate prefix '" + cfg.prefixes[kind] +
                 "'");
  }
  return cfg;
}

}  // namespace

Project::Project(fs::path root, ProjectConfig config,
                 std::unique_ptr<WriteLock> lock)
    : root_(std::move(root)), config_(std::move(config)),
      lock_(std::move(lock)) {}

Project::Project(Project&&) noexcept = default;
Project& Project::operator=(Project&&) noexcept = default;
Project::~Project() = default;

Project Project::init(const fs::path& root, const LevelScheme& levels) {
  std::error_code ec;
  if (fs::exists(root)) {
    if (!fs::is_directory(root))
      fail_usage("not a directory: " + root.string());
    if (!fs::is_empty(root, ec))
      fail_usage("directory not empty: " + root.string());
  } else {
    fs::create_directories(root, ec);
    if (ec) fail_io("cannot create directory: " + root.string());
  }

  ProjectConfig cfg = ProjectConfig::defaults();
  cfg.levels = levels;

  fs::create_directories(root / "items");
  fs::create_directories(root / "baselines");
  fs::create_directories(root / "manifests");
  fs::create_directories(root / "reports");
  write_file_atomic(root / "project.cfg", render_config(cfg));
  write_file_atomic(root / "counters", "");
  write_file_atomic(root / "links.tsv", "");

  auto lock = std::make_unique<WriteLock>(root);
  return Project(fs::absolute(root), std::move(cfg), std::move(lock));
}

Project Project::open(const fs::path& root, OpenMode mode) {
  if (!fs::is_directory(root)) fail_usage("no such project: " + root.string());
  fs::path cfg_file = root / "project.cfg";
  if (!fs::exists(cfg_file))
    fail_usage("not a project directory (missing project.cfg): " +
               root.string());
  ProjectConfig cfg = load_config(cfg_file);
  std::unique_ptr<WriteLock> lock;
  if (mode == OpenMode::read_write) lock = std::make_unique<WriteLock>(root);
  return Project(fs::absolute(root), std::move(cfg), std::move(lock));
}

fs::path Project::resolve(std::string_view relative) const {
  fs::path p{std::string(relative)};
  if (p.is_absolute()) fail_usage("path must be project-relative: " +
                                  std::string(relative));
  for (const auto& part : p)
    if (part == "..") fail_usage("path may not contain '..': " +
                                 std::string(relative));
  return root_ / p;
}

}  // namespace certkit
