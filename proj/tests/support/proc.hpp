#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace certkit::test {

struct ProcResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

inline std::string shell_quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

/// Path of the certkit binary under test (CERTKIT_BIN, set by ctest).
inline std::string cli_binary() {
  const char* bin = std::getenv("CERTKIT_BIN");
  if (!bin || !*bin)
    throw std::runtime_error("CERTKIT_BIN is not set; run through ctest");
  return bin;
}

/// Directory with the bundled fixture projects (CERTKIT_FIXTURES).
inline std::filesystem::path fixtures_dir() {
  const char* dir = std::getenv("CERTKIT_FIXTURES");
  if (!dir || !*dir)
    throw std::runtime_error("CERTKIT_FIXTURES is not set; run through ctest");
  return dir;
}

inline ProcResult run_process(const std::string& command) {
  ProcResult result;
  std::string full = command + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

/// Runs the CLI with the given arguments in `cwd`.
inline ProcResult run_cli(const std::filesystem::path& cwd,
                          const std::vector<std::string>& args) {
  std::string command = "cd " + shell_quote(cwd.string()) + " && " +
                        shell_quote(cli_binary());
  for (const auto& arg : args) command += " " + shell_quote(arg);
  return run_process(command);
}

inline void copy_tree(const std::filesystem::path& from,
                      const std::filesystem::path& to) {
  std::filesystem::copy(from, to,
                        std::filesystem::copy_options::recursive |
                            std::filesystem::copy_options::copy_symlinks);
}

}  // namespace certkit::test
