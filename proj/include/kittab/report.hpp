#ifndef KITTAB_REPORT_HPP
#define KITTAB_REPORT_HPP

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace kittab {

enum class Verdict { pass, fail, skipped };

std::string to_string(Verdict v);

struct Check {
  std::string name;
  Verdict verdict;
  /// Offending data for a failure, reason for a skip, optional detail for a pass.
  std::string witness;
  double millis = 0;
};

/// Outcome of a composite verification: named checks, computed values
/// (heights, generator lists) and free-form notes.
class VerificationReport {
 public:
  explicit VerificationReport(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }

  void pass(std::string name, std::string detail = {}, double millis = 0);
  /// Throws std::logic_error if the witness is empty.
  void fail(std::string name, std::string witness, double millis = 0);
  void skip(std::string name, std::string reason);
  /// pass if witness is nullopt, otherwise fail with it.
  void record(std::string name, const std::optional<std::string>& witness, double millis = 0);
  void value(std::string key, std::string v);
  void note(std::string text);
  /// Appends another report's checks and values, prefixing names.
  void merge(const VerificationReport& other, const std::string& prefix);

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const Check* find(std::string_view name) const;
  const std::string* find_value(std::string_view key) const;

  /// No failed check.
  bool passed() const;
  /// No failed and no skipped check.
  bool all_passed() const;

  /// Human-readable, deterministic (no timings).
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> values_;
  std::vector<std::string> notes_;
};

/// Runs fn() -> optional<string> witness and records the verdict with timing.
template <class Fn>
void timed_check(VerificationReport& report, std::string name, Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  std::optional<std::string> witness = fn();
  std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  report.record(std::move(name), witness, elapsed.count());
}

inline constexpr const char* kGradedGlobalNote = "graded-global verification";
inline constexpr const char* kHeightNote = "heights computed (not grade)";

}  // namespace kittab

#endif  // KITTAB_REPORT_HPP
