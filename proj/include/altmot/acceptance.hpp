#pragma once

#include <functional>
#include <string>
#include <vector>

namespace altmot::acceptance
{

struct CheckResult
{
  int id = 0;
  std::string title;
  bool passed = false;
  /// Failure descriptions (empty on success) or a short summary.
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 11;

/// Runs one criterion (1..kCriterionCount) at the given truncation degree.
/// Exceptions inside a check are reported as failures.
CheckResult run_criterion(int id, int max_degree);

/// Runs every criterion in order, reporting each result as it finishes.
std::vector<CheckResult> run_all(int max_degree, const std::function<void(const CheckResult &)> &on_result = {});

/// "PASS  [id] title  (x.xx s)" followed by indented failure details.
std::string format(const CheckResult &r);

} // namespace altmot::acceptance
