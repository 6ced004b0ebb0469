#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace turan {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// One failed inequality, with enough data to re-check it from scratch.
struct Violation {
  std::string check;        ///< name understood by recheck_violation
  std::string witness;      ///< graph6
  std::vector<int> cycle;   ///< longest cycle used, when the check has one
  KeyValues params;         ///< check parameters (k, F as graph6, ...)
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

struct VerificationReport {
  std::string target;
  KeyValues parameters;
  std::uint64_t instances_tested = 0;
  std::vector<Violation> violations;
  std::vector<ReportTable> tables;
  KeyValues conclusions;
  std::vector<std::pair<std::string, std::uint64_t>> counters;

  bool pass() const { return violations.empty(); }
  void add_counter(const std::string& name, std::uint64_t amount);
  std::uint64_t counter(const std::string& name) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { kJson, kCsv, kMarkdown };

ReportFormat report_format_from_string(const std::string& s);

/// Deterministic text; no timings are included.
std::string emit_report(const VerificationReport& report, ReportFormat format);

/// Inverse of the JSON form. Throws std::invalid_argument on bad input.
VerificationReport report_from_json(const std::string& text);

}  // namespace turan
