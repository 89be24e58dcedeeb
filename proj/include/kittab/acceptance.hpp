#ifndef KITTAB_ACCEPTANCE_HPP
#define KITTAB_ACCEPTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "kittab/report.hpp"

namespace kittab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  Verdict verdict = Verdict::skipped;
  /// Witness on failure, a summary of what was checked otherwise.
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Include the slow tier (criteria 3 and 4).
  bool slow = false;
  /// Run a single criterion regardless of tier.
  std::optional<int> only;
};

constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
bool is_slow(int id);
/// "[PASS] 1 title (0.12 s): detail"
std::string format_line(const CriterionResult& result);

}  // namespace kittab::acceptance

#endif  // KITTAB_ACCEPTANCE_HPP
