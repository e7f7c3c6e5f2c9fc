#pragma once

// Serialization of verification reports and the known-errata list.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trigsum/identities.hpp"

namespace trigsum {

enum class ReportFormat { text, json, csv };

/// Parses "text", "json" or "csv"; throws DomainError otherwise.
ReportFormat parse_format(const std::string& name);

/// One verdict flattened to the strings that appear in a report.
struct VerdictRecord {
  std::string identity;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string lhs;
  std::string rhs;
  std::string residual;
  std::string scale;
  std::string status;
  std::optional<std::string> corrected_rhs;
  std::optional<std::string> corrected_residual;
  std::optional<std::string> corrected_status;
  std::optional<std::string> reading;

  friend bool operator==(const VerdictRecord&, const VerdictRecord&) = default;
  friend auto operator<=>(const VerdictRecord&, const VerdictRecord&) = default;
};

VerdictRecord to_record(const Verdict& v);
std::vector<VerdictRecord> to_records(const VerificationReport& report);

/// JSON: an array with one object per verdict. CSV: a header row and the
/// same columns. Text: an aligned table followed by per-identity counts.
/// Output depends only on the report, so identical inputs give identical
/// bytes.
std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Inverse of the JSON emitter.
std::vector<VerdictRecord> parse_json_report(const std::string& text);

/// Writes `bytes` to `path`; throws std::runtime_error if it cannot.
void write_file(const std::filesystem::path& path, const std::string& bytes);

/// One id per line; blank lines and '#' comments ignored.
std::set<std::string> load_known_errata(const std::filesystem::path& path);

/// Path of the errata list shipped with the sources.
std::filesystem::path default_errata_path();

}  // namespace trigsum
