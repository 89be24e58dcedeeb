#include "kittab/report.hpp"

#include <stdexcept>

namespace kittab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

void VerificationReport::pass(std::string name, std::string detail, double millis) {
  checks_.push_back({std::move(name), Verdict::pass, std::move(detail), millis});
}

void VerificationReport::fail(std::string name, std::string witness, double millis) {
  if (witness.empty()) throw std::logic_error("failed check '" + name + "' without a witness");
  checks_.push_back({std::move(name), Verdict::fail, std::move(witness), millis});
}

void VerificationReport::skip(std::string name, std::string reason) {
  checks_.push_back({std::move(name), Verdict::skipped, std::move(reason), 0});
}

void VerificationReport::record(std::string name, const std::optional<std::string>& witness,
                                double millis) {
  if (witness)
    fail(std::move(name), *witness, millis);
  else
    pass(std::move(name), {}, millis);
}

void VerificationReport::value(std::string key, std::string v) {
  for (auto& [k, old] : values_)
    if (k == key) {
      old = std::move(v);
      return;
    }
  values_.emplace_back(std::move(key), std::move(v));
}

void VerificationReport::note(std::string text) {
  for (const auto& n : notes_)
    if (n == text) return;
  notes_.push_back(std::move(text));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  for (const auto& [k, v] : other.values_) value(prefix + k, v);
  for (const auto& n : other.notes_) note(n);
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

const std::string* VerificationReport::find_value(std::string_view key) const {
  for (const auto& [k, v] : values_)
    if (k == key) return &v;
  return nullptr;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks_)
    if (c.verdict == Verdict::fail) return false;
  return true;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks_)
    if (c.verdict != Verdict::pass) return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::string s = "report " + title_ + ": " + (passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : checks_) {
    s += "  [" + to_string(c.verdict) + "] " + c.name;
    if (!c.witness.empty()) s += (c.verdict == Verdict::fail ? "  witness: " : "  -- ") + c.witness;
    s += "\n";
  }
  for (const auto& [k, v] : values_) s += "  " + k + " = " + v + "\n";
  for (const auto& n : notes_) s += "  note: " + n + "\n";
  return s;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : checks_)
    checks.push_back({{"name", c.name},
                      {"verdict", to_string(c.verdict)},
                      {"witness", c.witness},
                      {"millis", c.millis}});
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values_) values[k] = v;
  return {{"title", title_},
          {"passed", passed()},
          {"checks", std::move(checks)},
          {"values", std::move(values)},
          {"notes", notes_}};
}

}  // namespace kittab
