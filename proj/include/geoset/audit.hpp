#pragma once

// Named pass/fail checks collected by the construction audits.

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geoset {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  void merge(const AuditReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  [[nodiscard]] bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }

  [[nodiscard]] std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
  }

  [[nodiscard]] const CheckResult* find(std::string_view name) const {
    for (const CheckResult& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Collects up to `limit` failure descriptions and counts the rest.
class FailureLog {
 public:
  explicit FailureLog(std::size_t limit = 4) : limit_(limit) {}

  void note(std::string what) {
    if (count_++ < limit_) shown_.push_back(std::move(what));
  }

  [[nodiscard]] bool empty() const { return count_ == 0; }
  [[nodiscard]] std::size_t count() const { return count_; }

  [[nodiscard]] std::string summary(std::size_t checked) const {
    std::string out = std::to_string(checked - count_) + "/" + std::to_string(checked) + " ok";
    for (const std::string& s : shown_) out += "; " + s;
    if (count_ > shown_.size()) out += "; +" + std::to_string(count_ - shown_.size()) + " more";
    return out;
  }

 private:
  std::size_t limit_;
  std::size_t count_ = 0;
  std::vector<std::string> shown_;
};

}  // namespace geoset
