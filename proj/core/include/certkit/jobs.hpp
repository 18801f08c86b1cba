/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "certkit/project.hpp"

namespace certkit {

/// A verification job: a named action turning input files (sources or
/// artifacts produced by other jobs) into derived artifacts. Inputs may be
/// glob patterns (`items/REQ-*.wi`); outputs are concrete paths. Output
/// sets of distinct jobs are disjoint and the producer->consumer graph is
/// acyclic.
struct Job {
  std::string name;
  std::vector<std::string> inputs;   // project-relative paths or patterns
  std::vector<std::string> outputs;  // project-relative paths
  std::string action;
  std::map<std::string, std::string> params;
};

enum class ArtifactState { valid, outdated, missing };
std::string artifact_state_name(ArtifactState state);

/// Freshness record written next to each produced artifact: the digests of
/// every input the producing job consumed, plus a fingerprint of the job
/// definition itself. The artifact is valid while all of them still match.
struct Manifest {
  std::string artifact;
  std::string job;
  std::string produced_at;
  std::string job_fingerprint;
  std::map<std::string, std::string> input_digests;  // path -> digest
};

enum class JobRunStatus { pass, fail, blocked };
std::string job_run_status_name(JobRunStatus status);

struct JobResult {
  std::string name;
  JobRunStatus status = JobRunStatus::pass;
  long duration_ms = 0;
  std::string message;
};

struct RunResults {
  std::vector<JobResult> results;

  bool all_passed() const;
  size_t executed() const;  // jobs that actually ran (pass or fail)
};

struct ImpactResult {
  std::set<std::string> jobs;
  std::set<std::string> artifacts;
};

/// Context handed to a job action. Outputs are written to temp paths and
/// renamed into place by the engine only after the action succeeds.
class ActionContext {
 public:
  ActionContext(Project& project, const Job& job,
                std::vector<std::string> input_files,
                std::filesystem::path temp_dir);

  Project& project() const { return *project_; }
  const Job& job() const { return *job_; }

  /// Matched input files (project-relative, sorted, existing).
  const std::vector<std::string>& input_files() const { return input_files_; }
  std::filesystem::path input_path(const std::string& relative) const;

  /// Temp path to write declared output i to.
  std::filesystem::path output_path(size_t i) const;
  /// Temp path of the first declared output with this extension (".csv");
  /// empty path when the job declares none.
  std::filesystem::path output_path_with_extension(
      const std::string& ext) const;

  std::string param_or(const std::string& key,
                       const std::string& fallback) const;

 private:
  Project* project_;
  const Job* job_;
  std::vector<std::string> input_files_;
  std::filesystem::path temp_dir_;
};

using ActionFn = std::function<void(ActionContext&)>;
using ActionRegistry = std::map<std::string, ActionFn>;

/// Artifact dependency engine over `jobs.cfg`: content-digest freshness,
/// change impact, minimal re-execution and a status overview.
class JobEngine {
 public:
  JobEngine(Project& project, ActionRegistry registry);

  const std::vector<Job>& jobs() const { return jobs_; }
  const Job* find_job(const std::string& name) const;

  /// Validates invariants (acyclic, disjoint outputs, no self-input) against
  /// the already registered jobs, then appends to jobs.cfg.
  Job register_job(const Job& job);

  /// Per-artifact freshness; anything downstream of a non-valid artifact is
  /// reported outdated.
  std::map<std::string, ArtifactState> status() const;

  /// Forward reachability from the changed paths over producer->consumer
  /// edges. Paths must exist in the graph.
  ImpactResult impact_analysis(const std::vector<std::string>& changed) const;

  /// Jobs with a missing or outdated output, in topological order,
  /// ties broken by job name.
  std::vector<std::string> plan() const;

  RunResults run();
  RunResults run(const std::vector<std::string>& plan);

  /// Current files matching a pattern (project-relative, sorted). Dotfiles
  /// and the manifest directory are never matched.
  std::vector<std::string> expand_pattern(const std::string& pattern) const;

  /// Source files: matched inputs that no job produces.
  std::set<std::string> source_files() const;
  std::set<std::string> artifact_paths() const;

 private:
  void load();
  void validate(const std::vector<Job>& jobs) const;
  std::string job_fingerprint(const Job& job) const;
  std::vector<std::string> expanded_inputs(const Job& job) const;
  /// producer -> consumers adjacency by job name.
  std::map<std::string, std::set<std::string>> edges() const;
  std::vector<std::string> topo_order() const;  // all jobs, name-tiebreak
  std::filesystem::path manifest_path(const std::string& artifact) const;
  std::optional<Manifest> load_manifest(const std::string& artifact) const;
  void save_manifest(const Manifest& manifest) const;

  Project* project_;
  ActionRegistry registry_;
  std::vector<Job> jobs_;
};

/// True when a concrete path matches a glob pattern (`*` and `?` within one
/// path segment).
bool glob_match(std::string_view pattern, std::string_view path);

std::string render_status_csv(const std::map<std::string, ArtifactState>&);
std::string render_status_html(const std::map<std::string, ArtifactState>&,
                               const std::vector<Job>& jobs);

}  // namespace certkit
