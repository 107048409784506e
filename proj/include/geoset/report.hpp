#pragma once

// Line-oriented run report: `key: value` lines, one `check:` line per audit
// entry, `time_*` lines for timings, and a final `status: pass|fail`.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geoset/audit.hpp"

namespace geoset {

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << v;
  return out.str();
}

class RunReport {
 public:
  explicit RunReport(std::string command) : command_(std::move(command)) {}

  void input(const std::string& path, std::string_view bytes) {
    lines_.emplace_back("input", path + " fnv1a64=" + hex64(fnv1a64(bytes)));
  }

  void value(std::string key, std::string v) { lines_.emplace_back(std::move(key), std::move(v)); }

  void check(const CheckResult& c) {
    failed_ = failed_ || !c.pass;
    std::string text = c.name + ": " + (c.pass ? "pass" : "fail");
    if (!c.detail.empty()) text += " (" + c.detail + ")";
    lines_.emplace_back("check", std::move(text));
  }

  void checks(const AuditReport& audit) {
    for (const CheckResult& c : audit.checks) check(c);
  }

  void timing(std::string name, double seconds) {
    std::ostringstream v;
    v << std::fixed << std::setprecision(3) << seconds * 1000.0;
    lines_.emplace_back("time_" + std::move(name) + "_ms", v.str());
  }

  void error(std::string message) {
    failed_ = true;
    lines_.emplace_back("error", std::move(message));
  }

  [[nodiscard]] bool passed() const { return !failed_; }

  void render(std::ostream& out) const {
    out << "command: " << command_ << '\n';
    for (const auto& [key, v] : lines_) out << key << ": " << v << '\n';
    out << "status: " << (passed() ? "pass" : "fail") << '\n';
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> lines_;
  bool failed_ = false;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace geoset
