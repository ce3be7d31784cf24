#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "varcmp/check_outcome.hpp"

namespace varcmp {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Inclusive integer range; "lo..hi" or a single value.
struct IntRange {
  int lo = 0;
  int hi = 0;

  /// Throws DomainError on malformed text or lo > hi.
  static IntRange parse(std::string_view text);
  std::string str() const;
  bool contains(int v) const noexcept { return v >= lo && v <= hi; }
};

enum class CheckKind { Bound, Monotone, Limit, Steps, Tables, Exploratory };

std::string_view to_string(CheckKind k) noexcept;
/// Comma-separated list, e.g. "bound,monotone". Throws DomainError on unknown names.
std::set<CheckKind> parse_checks(std::string_view text);

enum class ReportFormat { Csv, Json };

struct SweepSpec {
  IntRange d1{1, 4};
  IntRange d2{5, 400};
  std::set<CheckKind> checks{CheckKind::Bound, CheckKind::Monotone};
  std::uint64_t seed = 0;
  double floor = 1e-12;
  double limit_tolerance = 1e-3;
  int limit_d2 = 10000;
  int jobs = 0;  ///< 0: OpenMP default

  /// Throws DomainError for empty ranges, d1 < 1, or d2 < 5 when a check
  /// needs the variance.
  void validate() const;
  bool exploratory() const { return checks.count(CheckKind::Exploratory) > 0; }
};

struct SweepSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  std::size_t not_applicable = 0;
  std::size_t exploratory = 0;  ///< exploratory rows, whatever their status

  std::size_t total() const noexcept { return pass + fail + inconclusive + not_applicable + exploratory; }
};

struct SweepReport {
  SweepSpec spec;
  std::vector<CheckOutcome> rows;  ///< sorted by (claim_id, d1, d2)
  SweepSummary summary;

  /// 0: no failures outside exploratory rows; 1 otherwise.
  int exit_code() const noexcept { return summary.fail == 0 ? 0 : 1; }
};

/// Grid rows are evaluated in parallel with OpenMP; the report does not depend
/// on the thread count. Evaluation errors become failing rows with the
/// message in the note.
SweepReport run_sweep(const SweepSpec& spec);

/// Single-threaded reference; produces the same report as run_sweep.
SweepReport run_sweep_serial(const SweepSpec& spec);

SweepSummary summarize(const std::vector<CheckOutcome>& rows);

/// CSV columns check_id,d1,d2,margin,pass,note. Margins use %.17g.
void write_csv(std::ostream& os, const SweepReport& report);
/// {"header": {...}, "rows": [...], "summary": {...}}; no timestamps.
void write_json(std::ostream& os, const SweepReport& report);

/// Writes to path via a temporary file and rename; the temporary file is
/// removed if writing fails.
void write_report_file(const std::string& path, const SweepReport& report, ReportFormat format);

}  // namespace varcmp
