/*
 * Copyright (c) 2026 certkit contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace certkit {

enum class Standard { DO178C, DO331 };
std::string standard_name(Standard s);  // "DO-178C" / "DO-331"
std::optional<Standard> parse_standard(std::string_view name);

/// Criteria scores: low=1, medium=2, high=3.
enum class Score { low = 1, medium = 2, high = 3 };
std::string score_name(Score s);
std::optional<Score> parse_score(std::string_view name);

enum class ComplianceStatus { Full, Partial, NA };
std::string compliance_status_name(ComplianceStatus s);
std::optional<ComplianceStatus> parse_compliance_status(std::string_view name);

enum class SelectionOverride { none, include, exclude };

/// Software levels with applicable objectives; level E requires none, so it
/// never appears in applicability maps or reports.
constexpr std::array<char, 4> kSoftwareLevels = {'A', 'B', 'C', 'D'};

struct Objective {
  Standard standard = Standard::DO178C;
  std::string table;  // e.g. "A-4" or "MB.A-4"
  std::string id;     // e.g. "A-4.1" or "MB.A-4.1"
  std::string description;
  std::array<bool, 4> applicability{};  // indexed A,B,C,D
  Score importance = Score::low;
  Score automation = Score::low;
  Score reuse = Score::low;
  SelectionOverride override_ = SelectionOverride::none;
  ComplianceStatus status = ComplianceStatus::Partial;
  std::string rationale;
  bool selected = false;

  bool applicable_at(char level) const;
  bool applicable_to_all_levels() const;

  /// importance + automation + reuse, with importance promoted to high for
  /// objectives applicable at every level A-D.
  int combined_score() const;
};

struct MatrixRow {
  std::string table;
  size_t applicable = 0;
  size_t selected = 0;
  size_t full = 0;
  size_t partial = 0;
  size_t na = 0;
  size_t unselected = 0;
};

struct MatrixReport {
  Standard standard = Standard::DO178C;
  char level = 'C';
  std::vector<MatrixRow> rows;  // in canonical table order
};

/// Objective catalog; one file may carry rows for both standards.
class Catalog {
 public:
  static Catalog load(const std::filesystem::path& path);
  static Catalog from_csv(std::string_view content,
                          std::string_view source_name);

  /// The bundled representative sample catalog (not a copy of any standard).
  static std::string sample_csv();

  void save(const std::filesystem::path& path) const;
  std::string to_csv() const;

  const std::vector<Objective>& objectives() const { return objectives_; }
  std::vector<Standard> standards() const;
  static std::vector<std::string> tables_for(Standard standard);

  /// Marks `selected` on every objective: combined score >= threshold, then
  /// explicit include/exclude overrides. Threshold must lie in [3, 9].
  void select_subset(int threshold);

  /// Rationale is mandatory for Partial and NA.
  Objective& set_status(const std::string& objective_id,
                        ComplianceStatus status, const std::string& rationale);

  const Objective* find(const std::string& objective_id) const;

  MatrixReport matrix(Standard standard, char level) const;

 private:
  std::vector<Objective> objectives_;
};

std::string render_matrix_csv(const MatrixReport& report);
std::string render_matrix_html(const MatrixReport& report);

}  // namespace certkit
