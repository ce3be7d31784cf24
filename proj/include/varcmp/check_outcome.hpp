#pragma once

#include <string>
#include <string_view>

namespace varcmp {

enum class Status { Pass, Fail, Inconclusive, NotApplicable };

std::string_view to_string(Status s) noexcept;

/// Margins whose magnitude is at or below the floor cannot be certified in
/// binary64 and are reported as inconclusive.
struct Strictness {
  double floor = 1e-12;
};

/// margin > floor -> Pass, margin < -floor -> Fail, otherwise Inconclusive.
/// NaN margins fail.
Status classify_margin(double margin, const Strictness& strict) noexcept;

/// One verification record. A positive margin means the claim holds with slack.
struct CheckOutcome {
  std::string claim_id;
  int d1 = 0;
  int d2 = 0;
  double margin = 0.0;
  Status status = Status::Fail;
  bool exploratory = false;
  std::string note;

  bool pass() const noexcept { return status == Status::Pass; }
};

}  // namespace varcmp
