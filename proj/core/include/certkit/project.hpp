/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace certkit {

enum class ItemKind {
  Requirement,
  ModelSurrogate,
  TestCaseSurrogate,
  TestRun,
  ReviewChecklist,
};

const std::vector<ItemKind>& all_item_kinds();
std::string item_kind_name(ItemKind kind);
std::optional<ItemKind> parse_item_kind(std::string_view name);

/// Ordered requirement level labels, highest first.
class LevelScheme {
 public:
  LevelScheme() = default;
  explicit LevelScheme(std::vector<std::string> labels);

  static LevelScheme standard();  // aircraft, system, component, software

  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(std::string_view label) const;
  /// Position in the scheme; 0 is the highest level. Throws on unknown label.
  size_t index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

struct ProjectConfig {
  LevelScheme levels = LevelScheme::standard();
  std::map<ItemKind, std::string> prefixes;  // defaults REQ/MDL/TC/RUN/CHK

  static ProjectConfig defaults();
  std::string prefix_for(ItemKind kind) const;
};

enum class OpenMode { read_only, read_write };

/// A project directory: configuration, the work-item store, trace links,
/// job definitions and generated reports all live under one root.
/// Opening read_write takes the single-writer lock file; a second writer
/// is refused. Readers are not excluded.
class Project {
 public:
  /// Creates a new project skeleton. The directory must be empty or absent.
  static Project init(const std::filesystem::path& root,
                      const LevelScheme& levels = LevelScheme::standard());

  static Project open(const std::filesystem::path& root, OpenMode mode);

  Project(Project&&) noexcept;
  Project& operator=(Project&&) noexcept;
  ~Project();

  const std::filesystem::path& root() const { return root_; }
  const ProjectConfig& config() const { return config_; }
  bool writable() const { return lock_ != nullptr; }

  std::filesystem::path config_file() const { return root_ / "project.cfg"; }
  std::filesystem::path items_dir() const { return root_ / "items"; }
  std::filesystem::path baselines_dir() const { return root_ / "baselines"; }
  std::filesystem::path counters_file() const { return root_ / "counters"; }
  std::filesystem::path links_file() const { return root_ / "links.tsv"; }
  std::filesystem::path jobs_file() const { return root_ / "jobs.cfg"; }
  std::filesystem::path manifests_dir() const { return root_ / "manifests"; }
  std::filesystem::path reports_dir() const { return root_ / "reports"; }

  /// Resolves a project-relative path; rejects absolute paths and `..`.
  std::filesystem::path resolve(std::string_view relative) const;

 private:
  class WriteLock;

  Project(std::filesystem::path root, ProjectConfig config,
          std::unique_ptr<WriteLock> lock);

  std::filesystem::path root_;
  ProjectConfig config_;
  std::unique_ptr<WriteLock> lock_;
};

}  // namespace certkit
