#include "varcmp/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include <json.hpp>

#include "varcmp/errors.hpp"
#include "varcmp/proofcheck.hpp"
#include "varcmp/varband.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace varcmp {

namespace {

constexpr std::pair<CheckKind, std::string_view> kCheckNames[] = {
    {CheckKind::Bound, "bound"},   {CheckKind::Monotone, "monotone"}, {CheckKind::Limit, "limit"},
    {CheckKind::Steps, "steps"},   {CheckKind::Tables, "tables"},     {CheckKind::Exploratory, "exploratory"},
};

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw DomainError("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

struct Task {
  CheckKind kind;
  int d1;
  int d2;
};

std::vector<Task> plan(const SweepSpec& spec) {
  std::vector<Task> tasks;
  const auto has = [&](CheckKind k) { return spec.checks.count(k) > 0; };
  for (int d1 = spec.d1.lo; d1 <= spec.d1.hi; ++d1) {
    if (has(CheckKind::Tables) && d1 <= 4) tasks.push_back({CheckKind::Tables, d1, 0});
    if (has(CheckKind::Limit)) tasks.push_back({CheckKind::Limit, d1, spec.limit_d2});
    for (int d2 = spec.d2.lo; d2 <= spec.d2.hi; ++d2) {
      if (has(CheckKind::Bound)) tasks.push_back({CheckKind::Bound, d1, d2});
      if (has(CheckKind::Monotone)) tasks.push_back({CheckKind::Monotone, d1, d2});
      if (has(CheckKind::Steps) && d1 <= 4) tasks.push_back({CheckKind::Steps, d1, d2});
      if (spec.exploratory() && d1 >= 5) tasks.push_back({CheckKind::Exploratory, d1, d2});
    }
  }
  return tasks;
}

CheckOutcome error_row(const Task& t, const std::string& what) {
  CheckOutcome o;
  o.claim_id = std::string(to_string(t.kind));
  o.d1 = t.d1;
  o.d2 = t.d2;
  o.margin = std::nan("");
  o.status = Status::Fail;
  o.note = "error: " + what;
  return o;
}

std::vector<CheckOutcome> explore_rows(int d1, int d2, const Strictness& strict) {
  std::vector<CheckOutcome> rows;
  if (d1 % 2 == 1) {
    const StepReport r = falling_factorial_bounds_odd(d1, d2, strict);
    for (const auto& f : r.forms) {
      CheckOutcome o;
      o.claim_id = "explore/" + f.claim_id;
      o.d1 = d1;
      o.d2 = d2;
      o.margin = f.margin;
      o.status = f.status;
      o.exploratory = true;
      o.note = f.note;
      rows.push_back(std::move(o));
    }
    return rows;
  }
  auto scan = [&](const char* id, bool increasing) {
    CheckOutcome o;
    o.claim_id = id;
    o.d1 = d1;
    o.d2 = d2;
    o.exploratory = true;
    if (d2 < 7) {
      o.status = Status::NotApplicable;
      o.note = "needs d2 - 2 >= 5";
      return o;
    }
    try {
      const SeriesForms now = series_forms_even(d1, d2);
      const SeriesForms before = series_forms_even(d1, d2 - 2);
      o.margin = increasing ? now.J - before.J : before.K - now.K;
      o.status = classify_margin(o.margin, strict);
    } catch (const DomainError& e) {
      o.status = Status::NotApplicable;
      o.note = e.what();
    }
    return o;
  };
  rows.push_back(scan("explore/J-increasing", true));
  rows.push_back(scan("explore/K-decreasing", false));
  return rows;
}

std::vector<CheckOutcome> evaluate(const Task& t, const SweepSpec& spec) {
  const Strictness strict{spec.floor};
  std::vector<CheckOutcome> rows;
  try {
    switch (t.kind) {
      case CheckKind::Bound:
        rows.push_back(check_bound(FParams{t.d1, t.d2}, strict));
        break;
      case CheckKind::Monotone:
        rows.push_back(check_monotone_step(FParams{t.d1, t.d2}, strict));
        break;
      case CheckKind::Limit:
        rows.push_back(check_limit(t.d1, t.d2, spec.limit_tolerance));
        break;
      case CheckKind::Steps:
        rows = step_outcomes(FParams{t.d1, t.d2}, strict);
        break;
      case CheckKind::Tables:
        rows = table_program(t.d1);
        break;
      case CheckKind::Exploratory:
        rows = explore_rows(t.d1, t.d2, strict);
        break;
    }
  } catch (const std::exception& e) {
    rows.assign(1, error_row(t, e.what()));
  }
  for (auto& r : rows) {
    if (r.d1 >= 5 && t.kind != CheckKind::Limit) r.exploratory = true;
  }
  return rows;
}

SweepReport assemble(const SweepSpec& spec, std::vector<std::vector<CheckOutcome>>& parts) {
  SweepReport report;
  report.spec = spec;
  for (auto& part : parts) {
    for (auto& row : part) report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    if (a.d1 != b.d1) return a.d1 < b.d1;
    return a.d2 < b.d2;
  });
  report.summary = summarize(report.rows);
  return report;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_margin(double m) {
  if (std::isnan(m)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", m);
  return buf;
}

std::string row_note(const CheckOutcome& r) {
  std::string note;
  if (r.status != Status::Pass && r.status != Status::Fail) note = std::string(to_string(r.status));
  if (r.exploratory) note += note.empty() ? "exploratory" : "; exploratory";
  if (!r.note.empty()) note += (note.empty() ? "" : "; ") + r.note;
  return note;
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw DomainError("empty range: " + std::string(text));
  return r;
}

std::string IntRange::str() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

std::string_view to_string(CheckKind k) noexcept {
  for (const auto& [kind, name] : kCheckNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::set<CheckKind> parse_checks(std::string_view text) {
  std::set<CheckKind> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    bool found = false;
    for (const auto& [kind, name] : kCheckNames) {
      if (name == item) {
        out.insert(kind);
        found = true;
      }
    }
    if (!found) throw DomainError("unknown check: '" + std::string(item) + "'");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw DomainError("no checks selected");
  return out;
}

void SweepSpec::validate() const {
  if (d1.lo > d1.hi || d2.lo > d2.hi) throw DomainError("empty parameter range");
  if (d1.lo < 1) throw DomainError("d1 must be >= 1");
  if (checks.empty()) throw DomainError("no checks selected");
  const bool grid = checks.count(CheckKind::Bound) || checks.count(CheckKind::Monotone) ||
                    checks.count(CheckKind::Steps) || checks.count(CheckKind::Exploratory);
  if (grid && d2.lo < 5) {
    throw MomentUndefinedError("variance undefined for d2 ≤ 4 (d2 range " + d2.str() + ")");
  }
  if (checks.count(CheckKind::Limit) && limit_d2 < 1000) throw DomainError("limit d2 must be >= 1000");
  if (!(limit_tolerance > 0.0)) throw DomainError("limit tolerance must be positive");
  if (!(floor >= 0.0)) throw DomainError("strictness floor must be non-negative");
  if (jobs < 0) throw DomainError("jobs must be >= 0");
}

SweepReport run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<Task> tasks = plan(spec);
  std::vector<std::vector<CheckOutcome>> parts(tasks.size());
  const auto n = static_cast<long long>(tasks.size());
#ifdef _OPENMP
  const int threads = spec.jobs > 0 ? spec.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long long i = 0; i < n; ++i) parts[i] = evaluate(tasks[i], spec);
  return assemble(spec, parts);
}

SweepReport run_sweep_serial(const SweepSpec& spec) {
  spec.validate();
  const std::vector<Task> tasks = plan(spec);
  std::vector<std::vector<CheckOutcome>> parts;
  parts.reserve(tasks.size());
  for (const auto& t : tasks) parts.push_back(evaluate(t, spec));
  return assemble(spec, parts);
}

SweepSummary summarize(const std::vector<CheckOutcome>& rows) {
  SweepSummary s;
  for (const auto& r : rows) {
    if (r.exploratory) {
      ++s.exploratory;
      continue;
    }
    switch (r.status) {
      case Status::Pass:
        ++s.pass;
        break;
      case Status::Fail:
        ++s.fail;
        break;
      case Status::Inconclusive:
        ++s.inconclusive;
        break;
      case Status::NotApplicable:
        ++s.not_applicable;
        break;
    }
  }
  return s;
}

void write_csv(std::ostream& os, const SweepReport& report) {
  os << "check_id,d1,d2,margin,pass,note\n";
  for (const auto& r : report.rows) {
    os << csv_field(r.claim_id) << ',' << r.d1 << ',' << r.d2 << ',' << format_margin(r.margin) << ','
       << (r.pass() ? "true" : "false") << ',' << csv_field(row_note(r)) << '\n';
  }
}

void write_json(std::ostream& os, const SweepReport& report) {
  using json = nlohmann::ordered_json;
  json header;
  header["tool"] = "varcmp";
  header["version"] = std::string(kToolVersion);
  json spec;
  spec["d1"] = report.spec.d1.str();
  spec["d2"] = report.spec.d2.str();
  json checks = json::array();
  for (CheckKind k : report.spec.checks) checks.push_back(std::string(to_string(k)));
  spec["checks"] = checks;
  spec["seed"] = report.spec.seed;
  spec["floor"] = report.spec.floor;
  spec["limit_tolerance"] = report.spec.limit_tolerance;
  spec["limit_d2"] = report.spec.limit_d2;
  header["spec"] = spec;

  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["check_id"] = r.claim_id;
    row["d1"] = r.d1;
    row["d2"] = r.d2;
    row["margin"] = std::isfinite(r.margin) ? json(r.margin) : json(nullptr);
    row["pass"] = r.pass();
    row["status"] = std::string(to_string(r.status));
    row["exploratory"] = r.exploratory;
    row["note"] = r.note;
    rows.push_back(std::move(row));
  }

  const SweepSummary& s = report.summary;
  json summary;
  summary["rows"] = report.rows.size();
  summary["pass"] = s.pass;
  summary["fail"] = s.fail;
  summary["inconclusive"] = s.inconclusive;
  summary["not_applicable"] = s.not_applicable;
  summary["exploratory"] = s.exploratory;

  json doc;
  doc["header"] = header;
  doc["rows"] = rows;
  doc["summary"] = summary;
  os << doc.dump(2) << '\n';
}

void write_report_file(const std::string& path, const SweepReport& report, ReportFormat format) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
      if (format == ReportFormat::Json) {
        write_json(out, report);
      } else {
        write_csv(out, report);
      }
      out.flush();
      if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    fs::rename(tmp, target);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

}  // namespace varcmp
