#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace abcmax {

enum class ConstraintKind { none, edge_connectivity_eq, vertex_connectivity_eq, chromatic_eq };

struct ConstraintSpec {
  ConstraintKind kind = ConstraintKind::none;
  int value = 0;

  friend bool operator==(const ConstraintSpec&, const ConstraintSpec&) = default;
};

/// Throws std::invalid_argument: connectivity values must be >= 1,
/// chromatic values >= 2.
void validate(const ConstraintSpec& c);

std::string_view to_string(ConstraintKind kind);
ConstraintKind parse_constraint_kind(std::string_view text);

enum class CellStatus { must_match, evidence };

std::string_view to_string(CellStatus status);

/// Outcome of one (n, constraint) cell.
struct ExtremalResult {
  int n = 0;
  ConstraintSpec constraint;
  CellStatus status = CellStatus::evidence;
  std::uint64_t scanned = 0;
  std::optional<double> max_value;
  std::vector<std::string> maximizers;  // graph6, sorted
  std::optional<std::string> predicted;  // graph6 of the expected extremal graph
  bool matches = false;
  std::vector<std::string> near_ties;  // graph6, sorted
  std::optional<double> runner_up_gap;
  std::optional<double> bound;  // closed form for the cell, when one applies
  bool constraint_verified = false;
  // pass / fail for must-match cells; confirmed / refuted / observed / empty
  // for evidence cells.
  std::string verdict;

  friend bool operator==(const ExtremalResult&, const ExtremalResult&) = default;
};

/// Outcome of a sampled or swept property check.
struct PropertySummary {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::optional<double> min_gap;
  std::vector<std::string> witnesses;
  std::string note;

  bool passed() const { return violations == 0 && checks > 0; }
  friend bool operator==(const PropertySummary&, const PropertySummary&) = default;
};

struct CampaignParameters {
  int n_min = 0;
  int n_max = 0;
  std::optional<int> k;
  std::optional<int> chi;
  double epsilon = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  bool allow_long = false;
  bool predictions = true;

  friend bool operator==(const CampaignParameters&, const CampaignParameters&) = default;
};

/// Execution metadata; the only part of a report that may differ between
/// runs with identical parameters.
struct RunInfo {
  int jobs = 1;
  double wall_time_s = 0;

  friend bool operator==(const RunInfo&, const RunInfo&) = default;
};

inline constexpr std::string_view kReportSchemaVersion = "1.0";

struct Report {
  std::string schema_version{kReportSchemaVersion};
  std::string campaign;
  CampaignParameters parameters;
  std::vector<ExtremalResult> cells;
  std::vector<PropertySummary> properties;
  RunInfo run;

  std::uint64_t total_scanned() const;
  /// Must-match cells that did not pass, plus failed properties.
  std::vector<std::string> failures() const;
  bool passed() const { return failures().empty(); }

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// Canonical text (sorted keys, two-space indent).
std::string to_json_text(const Report& r);
/// The same without the run block, for comparing runs.
std::string deterministic_json_text(const Report& r);

/// One row per cell, then one row per property, with a header row.
std::string to_csv(const Report& r);

/// Fixed notation, locale-independent.
std::string format_fixed(double value, int precision = 9);

}  // namespace abcmax
