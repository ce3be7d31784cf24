#include "varcmp/check_outcome.hpp"

#include <cmath>

namespace varcmp {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::NotApplicable:
      return "not-applicable";
  }
  return "fail";
}

Status classify_margin(double margin, const Strictness& strict) noexcept {
  if (std::isnan(margin)) return Status::Fail;
  if (margin > strict.floor) return Status::Pass;
  if (margin < -strict.floor) return Status::Fail;
  return Status::Inconclusive;
}

}  // namespace varcmp
