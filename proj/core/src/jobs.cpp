/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "certkit/jobs.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <queue>

#include "certkit/digest.hpp"
#include "certkit/errors.hpp"
#include "certkit/kvfile.hpp"
#include "certkit/util.hpp"

namespace certkit {

namespace fs = std::filesystem;

std::string artifact_state_name(ArtifactState state) {
  switch (state) {
    case ArtifactState::valid:
      return "valid";
    case ArtifactState::outdated:
      return "outdated";
    case ArtifactState::missing:
      return "missing";
  }
  return "?";
}

std::string job_run_status_name(JobRunStatus status) {
  switch (status) {
    case JobRunStatus::pass:
      return "pass";
    case JobRunStatus::fail:
      return "fail";
    case JobRunStatus::blocked:
      return "blocked";
  }
  return "?";
}

bool RunResults::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const JobResult& r) {
    return r.status == JobRunStatus::pass;
  });
}

size_t RunResults::executed() const {
  return static_cast<size_t>(
      std::count_if(results.begin(), results.end(), [](const JobResult& r) {
        return r.status != JobRunStatus::blocked;
      }));
}

// ---- glob matching ----

namespace {

bool segment_match(std::string_view pattern, std::string_view text) {
  // iterative wildcard match, '*' any run, '?' one char, within a segment
  size_t p = 0, t = 0;
  size_t star = std::string_view::npos, star_t = 0;
  while (t < text.size()) {
    if (p < pattern.size() &&
        (pattern[p] == text[t] || pattern[p] == '?')) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      star_t = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++star_t;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) {
  auto pattern_parts = split(pattern, '/');
  auto path_parts = split(path, '/');
  if (pattern_parts.size() != path_parts.size()) return false;
  for (size_t i = 0; i < pattern_parts.size(); ++i)
    if (!segment_match(pattern_parts[i], path_parts[i])) return false;
  return true;
}

// ---- ActionContext ----

ActionContext::ActionContext(Project& project, const Job& job,
                             std::vector<std::string> input_files,
                             fs::path temp_dir)
    : project_(&project), job_(&job), input_files_(std::move(input_files)),
      temp_dir_(std::move(temp_dir)) {}

fs::path ActionContext::input_path(const std::string& relative) const {
  return project_->resolve(relative);
}

fs::path ActionContext::output_path(size_t i) const {
  if (i >= job_->outputs.size())
    fail_usage("job '" + job_->name + "' declares no output #" +
               std::to_string(i));
  fs::path p = temp_dir_ / fs::path(job_->outputs[i]).filename();
  p += "." + std::to_string(i);
  return p;
}

fs::path ActionContext::output_path_with_extension(
    const std::string& ext) const {
  for (size_t i = 0; i < job_->outputs.size(); ++i)
    if (fs::path(job_->outputs[i]).extension() == ext) return output_path(i);
  return {};
}

std::string ActionContext::param_or(const std::string& key,
                                    const std::string& fallback) const {
  auto it = job_->params.find(key);
  return it == job_->params.end() ? fallback : it->second;
}

// ---- jobs.cfg ----

namespace {

std::vector<Job> parse_jobs_cfg(const std::string& content,
                                const std::string& source) {
  std::vector<Job> jobs;
  Job current;
  bool open = false;
  int line_no = 0;

  auto flush = [&]() {
    if (!open) return;
    if (current.action.empty())
      fail_usage(source + ": job '" + current.name + "' has no action");
    if (current.outputs.empty())
      fail_usage(source + ": job '" + current.name + "' has no outputs");
    jobs.push_back(std::move(current));
    current = Job{};
    open = false;
  };

  for (const auto& raw : split(content, '\n')) {
    ++line_no;
    std::string line = trim(raw);
    std::string where = source + ":" + std::to_string(line_no);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail_usage(where + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "job") {
      flush();
      if (value.empty()) fail_usage(where + ": empty job name");
      current.name = value;
      open = true;
    } else if (!open) {
      fail_usage(where + ": '" + key + "' outside a job block");
    } else if (key == "inputs") {
      current.inputs = split_list(value, ',');
    } else if (key == "outputs") {
      current.outputs = split_list(value, ',');
    } else if (key == "action") {
      current.action = value;
    } else if (starts_with(key, "param.")) {
      current.params[key.substr(6)] = value;
    } else {
      fail_usage(where + ": unknown key '" + key + "'");
    }
  }
  flush();
  return jobs;
}

std::string render_job_block(const Job& job) {
  std::string out = "job: " + job.name + "\n";
  std::string inputs;
  for (const auto& i : job.inputs) {
    if (!inputs.empty()) inputs += ", ";
    inputs += i;
  }
  out += "inputs: " + inputs + "\n";
  std::string outputs;
  for (const auto& o : job.outputs) {
    if (!outputs.empty()) outputs += ", ";
    outputs += o;
  }
  out += "outputs: " + outputs + "\n";
  out += "action: " + job.action + "\n";
  for (const auto& [k, v] : job.params) out += "param." + k + ": " + v + "\n";
  return out;
}

}  // namespace

// ---- engine ----

JobEngine::JobEngine(Project& project, ActionRegistry registry)
    : project_(&project), registry_(std::move(registry)) {
  load();
}

void JobEngine::load() {
  if (fs::exists(project_->jobs_file()))
    jobs_ = parse_jobs_cfg(read_file(project_->jobs_file()),
                           project_->jobs_file().string());
  validate(jobs_);
}

const Job* JobEngine::find_job(const std::string& name) const {
  for (const auto& j : jobs_)
    if (j.name == name) return &j;
  return nullptr;
}

void JobEngine::validate(const std::vector<Job>& jobs) const {
  std::map<std::string, std::string> producer_of;  // output -> job
  std::set<std::string> names;
  for (const auto& job : jobs) {
    if (!names.insert(job.name).second)
      fail_usage("duplicate job name: '" + job.name + "'");
    for (const auto& output : job.outputs) {
      if (output.empty() || output.front() == '/' ||
          output.find("..") != std::string::npos)
        fail_usage("job '" + job.name + "': bad output path '" + output + "'");
      auto [it, inserted] = producer_of.emplace(output, job.name);
      if (!inserted)
        fail_usage("output collision on '" + output + "' between jobs '" +
                   it->second + "' and '" + job.name + "'");
      for (const auto& input : job.inputs)
        if (glob_match(input, output))
          fail_usage("job '" + job.name + "': output '" + output +
                     "' matches its own input '" + input + "'");
    }
  }

  // cycle check over producer->consumer edges
  std::map<std::string, std::set<std::string>> adj;
  std::map<std::string, int> indegree;
  for (const auto& job : jobs) indegree[job.name] = 0;
  for (const auto& producer : jobs) {
    for (const auto& output : producer.outputs) {
      for (const auto& consumer : jobs) {
        if (consumer.name == producer.name) continue;
        for (const auto& input : consumer.inputs) {
          if (glob_match(input, output) &&
              adj[producer.name].insert(consumer.name).second)
            ++indegree[consumer.name];
        }
      }
    }
  }
  std::deque<std::string> ready;
  for (const auto& [name, deg] : indegree)
    if (deg == 0) ready.push_back(name);
  size_t seen = 0;
  while (!ready.empty()) {
    std::string job = ready.front();
    ready.pop_front();
    ++seen;
    for (const auto& next : adj[job])
      if (--indegree[next] == 0) ready.push_back(next);
  }
  if (seen != jobs.size())
    fail_usage("job graph has a cycle");
}

Job JobEngine::register_job(const Job& job) {
  if (!project_->writable())
    fail_usage("project opened read-only; mutation refused");
  auto combined = jobs_;
  combined.push_back(job);
  validate(combined);
  jobs_ = std::move(combined);

  std::string content = fs::exists(project_->jobs_file())
                            ? read_file(project_->jobs_file())
                            : std::string();
  if (!content.empty() && content.back() != '\n') content += '\n';
  if (!content.empty()) content += '\n';
  content += render_job_block(job);
  write_file_atomic(project_->jobs_file(), content);
  return job;
}

std::vector<std::string> JobEngine::expand_pattern(
    const std::string& pattern) const {
  std::vector<std::string> matches;
  auto parts = split(pattern, '/');
  if (parts.empty()) return matches;

  // walk the tree segment by segment
  std::vector<fs::path> frontier{project_->root()};
  for (size_t depth = 0; depth < parts.size(); ++depth) {
    const std::string& part = parts[depth];
    bool last = depth + 1 == parts.size();
    std::vector<fs::path> next;
    for (const auto& dir : frontier) {
      if (!fs::is_directory(dir)) continue;
      for (const auto& entry : fs::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        if (name.empty() || name.front() == '.') continue;
        if (depth == 0 && name == "manifests") continue;
        if (!segment_match(part, name)) continue;
        if (last) {
          if (entry.is_regular_file()) next.push_back(entry.path());
        } else if (entry.is_directory()) {
          next.push_back(entry.path());
        }
      }
    }
    frontier = std::move(next);
  }
  for (const auto& p : frontier)
    matches.push_back(fs::relative(p, project_->root()).generic_string());
  std::sort(matches.begin(), matches.end());
  return matches;
}

std::vector<std::string> JobEngine::expanded_inputs(const Job& job) const {
  std::set<std::string> files;
  for (const auto& pattern : job.inputs)
    for (auto& match : expand_pattern(pattern)) files.insert(std::move(match));
  return {files.begin(), files.end()};
}

std::map<std::string, std::set<std::string>> JobEngine::edges() const {
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& producer : jobs_) {
    for (const auto& output : producer.outputs) {
      for (const auto& consumer : jobs_) {
        if (consumer.name == producer.name) continue;
        for (const auto& input : consumer.inputs)
          if (glob_match(input, output)) adj[producer.name].insert(consumer.name);
      }
    }
  }
  return adj;
}

std::vector<std::string> JobEngine::topo_order() const {
  auto adj = edges();
  std::map<std::string, int> indegree;
  for (const auto& job : jobs_) indegree[job.name] = 0;
  for (const auto& [from, tos] : adj)
    for (const auto& to : tos) ++indegree[to];

  std::priority_queue<std::string, std::vector<std::string>,
                      std::greater<std::string>>
      ready;
  for (const auto& [name, deg] : indegree)
    if (deg == 0) ready.push(name);

  std::vector<std::string> order;
  while (!ready.empty()) {
    std::string job = ready.top();
    ready.pop();
    order.push_back(job);
    for (const auto& next : adj[job])
      if (--indegree[next] == 0) ready.push(next);
  }
  return order;
}

std::set<std::string> JobEngine::artifact_paths() const {
  std::set<std::string> artifacts;
  for (const auto& job : jobs_)
    artifacts.insert(job.outputs.begin(), job.outputs.end());
  return artifacts;
}

std::set<std::string> JobEngine::source_files() const {
  std::set<std::string> artifacts = artifact_paths();
  std::set<std::string> sources;
  for (const auto& job : jobs_)
    for (const auto& file : expanded_inputs(job))
      if (!artifacts.count(file)) sources.insert(file);
  return sources;
}

// ---- manifests ----

std::string JobEngine::job_fingerprint(const Job& job) const {
  std::string canon = "action: " + job.action + "\n";
  for (const auto& input : job.inputs) canon += "input: " + input + "\n";
  for (const auto& output : job.outputs) canon += "output: " + output + "\n";
  for (const auto& [k, v] : job.params)
    canon += "param." + k + ": " + v + "\n";
  return sha256_hex(canon);
}

fs::path JobEngine::manifest_path(const std::string& artifact) const {
  std::string mangled = artifact;
  size_t pos = 0;
  while ((pos = mangled.find('/', pos)) != std::string::npos) {
    mangled.replace(pos, 1, "__");
    pos += 2;
  }
  return project_->manifests_dir() / (mangled + ".mf");
}

std::optional<Manifest> JobEngine::load_manifest(
    const std::string& artifact) const {
  fs::path file = manifest_path(artifact);
  if (!fs::exists(file)) return std::nullopt;
  KvBlock block = parse_kv_block(read_file(file), file.string());
  Manifest m;
  m.artifact = block.get_or("artifact", artifact);
  m.job = block.get_or("job", "");
  m.produced_at = block.get_or("produced_at", "");
  m.job_fingerprint = block.get_or("job_fingerprint", "");
  for (const auto& line : split(block.body, '\n')) {
    if (trim(line).empty()) continue;
    size_t space = line.rfind(' ');
    if (space == std::string::npos)
      fail_usage(file.string() + ": malformed digest line");
    m.input_digests[line.substr(0, space)] = line.substr(space + 1);
  }
  return m;
}

void JobEngine::save_manifest(const Manifest& manifest) const {
  KvBlock block;
  block.set("artifact", manifest.artifact);
  block.set("job", manifest.job);
  block.set("produced_at", manifest.produced_at);
  block.set("job_fingerprint", manifest.job_fingerprint);
  for (const auto& [path, digest] : manifest.input_digests)
    block.body += path + " " + digest + "\n";
  write_file_atomic(manifest_path(manifest.artifact), render_kv_block(block));
}

// ---- status / impact / plan / run ----

std::map<std::string, ArtifactState> JobEngine::status() const {
  std::map<std::string, ArtifactState> states;
  std::map<std::string, std::string> digest_cache;
  auto digest_of = [&](const std::string& rel) -> const std::string& {
    auto it = digest_cache.find(rel);
    if (it == digest_cache.end())
      it = digest_cache
               .emplace(rel, sha256_file(project_->resolve(rel)))
               .first;
    return it->second;
  };

  // direct freshness per job output
  for (const auto& job : jobs_) {
    std::string fingerprint = job_fingerprint(job);
    std::vector<std::string> current_inputs = expanded_inputs(job);
    for (const auto& output : job.outputs) {
      if (!fs::exists(project_->resolve(output))) {
        states[output] = ArtifactState::missing;
        continue;
      }
      auto manifest = load_manifest(output);
      if (!manifest || manifest->job != job.name ||
          manifest->job_fingerprint != fingerprint) {
        states[output] = ArtifactState::outdated;
        continue;
      }
      bool fresh = manifest->input_digests.size() == current_inputs.size();
      if (fresh) {
        for (const auto& input : current_inputs) {
          auto it = manifest->input_digests.find(input);
          if (it == manifest->input_digests.end() ||
              it->second != digest_of(input)) {
            fresh = false;
            break;
          }
        }
      }
      states[output] = fresh ? ArtifactState::valid : ArtifactState::outdated;
    }
  }

  // propagate: consumers of a non-valid artifact are outdated
  for (const auto& name : topo_order()) {
    const Job* job = find_job(name);
    bool upstream_dirty = false;
    for (const auto& other : jobs_) {
      if (other.name == name) continue;
      for (const auto& output : other.outputs) {
        for (const auto& input : job->inputs) {
          if (glob_match(input, output) &&
              states[output] != ArtifactState::valid)
            upstream_dirty = true;
        }
      }
    }
    if (!upstream_dirty) continue;
    for (const auto& output : job->outputs)
      if (states[output] == ArtifactState::valid)
        states[output] = ArtifactState::outdated;
  }
  return states;
}

ImpactResult JobEngine::impact_analysis(
    const std::vector<std::string>& changed) const {
  auto artifacts = artifact_paths();
  auto adj = edges();

  std::deque<std::string> queue;
  ImpactResult result;
  for (const auto& path : changed) {
    bool known = artifacts.count(path) > 0;
    for (const auto& job : jobs_) {
      for (const auto& input : job.inputs) {
        if (glob_match(input, path)) {
          known = true;
          if (result.jobs.insert(job.name).second) queue.push_back(job.name);
        }
      }
    }
    if (!known) fail_usage("path not in the job graph: '" + path + "'");
  }
  while (!queue.empty()) {
    std::string job = queue.front();
    queue.pop_front();
    for (const auto& next : adj[job])
      if (result.jobs.insert(next).second) queue.push_back(next);
  }
  for (const auto& name : result.jobs) {
    const Job* job = find_job(name);
    result.artifacts.insert(job->outputs.begin(), job->outputs.end());
  }
  return result;
}

std::vector<std::string> JobEngine::plan() const {
  auto states = status();
  std::set<std::string> stale_jobs;
  for (const auto& job : jobs_)
    for (const auto& output : job.outputs)
      if (states[output] != ArtifactState::valid) stale_jobs.insert(job.name);

  std::vector<std::string> ordered;
  for (const auto& name : topo_order())
    if (stale_jobs.count(name)) ordered.push_back(name);
  return ordered;
}

RunResults JobEngine::run() { return run(plan()); }

RunResults JobEngine::run(const std::vector<std::string>& plan) {
  if (!project_->writable())
    fail_usage("project opened read-only; job execution refused");

  RunResults results;
  std::set<std::string> failed_or_blocked;
  auto adj = edges();

  for (const auto& name : plan) {
    const Job* job = find_job(name);
    if (!job) fail_usage("unknown job in plan: '" + name + "'");

    JobResult result;
    result.name = name;

    // blocked when a producer of one of our inputs failed in this run
    bool blocked = false;
    for (const auto& [producer, consumers] : adj)
      if (consumers.count(name) && failed_or_blocked.count(producer))
        blocked = true;
    if (blocked) {
      result.status = JobRunStatus::blocked;
      result.message = "upstream job failed";
      failed_or_blocked.insert(name);
      results.results.push_back(std::move(result));
      continue;
    }

    auto action_it = registry_.find(job->action);
    if (action_it == registry_.end()) {
      result.status = JobRunStatus::fail;
      result.message = "unknown action '" + job->action + "'";
      failed_or_blocked.insert(name);
      results.results.push_back(std::move(result));
      continue;
    }

    auto started = std::chrono::steady_clock::now();
    std::vector<std::string> inputs = expanded_inputs(*job);
    std::map<std::string, std::string> input_digests;
    fs::path temp_dir = project_->manifests_dir() / ".work";

    try {
      for (const auto& input : inputs)
        input_digests[input] = sha256_file(project_->resolve(input));

      fs::remove_all(temp_dir);
      fs::create_directories(temp_dir);
      ActionContext ctx(*project_, *job, inputs, temp_dir);
      action_it->second(ctx);

      // all outputs must have been produced before anything is moved
      for (size_t i = 0; i < job->outputs.size(); ++i)
        if (!fs::exists(ctx.output_path(i)))
          fail_io("action '" + job->action + "' did not produce output '" +
                  job->outputs[i] + "'");
      std::string stamp = now_iso8601_utc();
      std::string fingerprint = job_fingerprint(*job);
      for (size_t i = 0; i < job->outputs.size(); ++i) {
        fs::path final_path = project_->resolve(job->outputs[i]);
        fs::create_directories(final_path.parent_path());
        fs::rename(ctx.output_path(i), final_path);
        save_manifest(Manifest{job->outputs[i], job->name, stamp, fingerprint,
                               input_digests});
      }
      result.status = JobRunStatus::pass;
    } catch (const std::exception& e) {
      result.status = JobRunStatus::fail;
      result.message = e.what();
      failed_or_blocked.insert(name);
    }
    std::error_code ec;
    fs::remove_all(temp_dir, ec);
    result.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    results.results.push_back(std::move(result));
  }
  return results;
}

// ---- status report rendering ----

std::string render_status_csv(
    const std::map<std::string, ArtifactState>& states) {
  std::string out = "artifact,state\n";
  for (const auto& [artifact, state] : states)
    out += csv_escape(artifact) + "," + artifact_state_name(state) + "\n";
  return out;
}

std::string render_status_html(
    const std::map<std::string, ArtifactState>& states,
    const std::vector<Job>& jobs) {
  std::map<std::string, std::string> producer;
  for (const auto& job : jobs)
    for (const auto& output : job.outputs) producer[output] = job.name;

  size_t valid = 0, outdated = 0, missing = 0;
  for (const auto& [artifact, state] : states) {
    if (state == ArtifactState::valid) ++valid;
    if (state == ArtifactState::outdated) ++outdated;
    if (state == ArtifactState::missing) ++missing;
  }

  std::string out;
  out += "<!doctype html>\n<html><head><meta charset=\"utf-8\">\n"
         "<title>Artifact status</title>\n";
  out += "<style>body{font-family:sans-serif}table{border-collapse:collapse}"
         "td,th{border:1px solid #999;padding:4px 10px}"
         ".valid{background:#d4edc9}.outdated{background:#ffe3a3}"
         ".missing{background:#f3c6c6}</style></head>\n<body>\n";
  out += "<h1>Artifact status</h1>\n";
  out += "<p class=\"summary\">valid: " + std::to_string(valid) +
         ", outdated: " + std::to_string(outdated) +
         ", missing: " + std::to_string(missing) + "</p>\n";
  out += "<table>\n<tr><th>artifact</th><th>job</th><th>state</th></tr>\n";
  for (const auto& [artifact, state] : states) {
    std::string s = artifact_state_name(state);
    out += "<tr class=\"" + s + "\"><td>" + html_escape(artifact) +
           "</td><td>" + html_escape(producer[artifact]) + "</td><td>" + s +
           "</td></tr>\n";
  }
  out += "</table>\n</body></html>\n";
  return out;
}

}  // namespace certkit
