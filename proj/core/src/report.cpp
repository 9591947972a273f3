#include "qs3/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qs3 {

int VerificationReport::passed() const {
  int n = 0;
  for (const CheckRecord& c : checks)
    if (c.pass) ++n;
  return n;
}

void VerificationReport::add_numeric(const std::string& name, const std::string& inputs,
                                     double value, double threshold) {
  add(CheckRecord{name, inputs, value, threshold, value <= threshold});
}

void VerificationReport::add_bool(const std::string& name, const std::string& inputs, bool ok) {
  add(CheckRecord{name, inputs, ok ? 1.0 : 0.0, 1.0, ok});
}

void VerificationReport::sort_records() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["schema"] = "1";
  j["suite"] = report.suite;
  j["config"] = report.config_echo;
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"inputs", c.inputs},
                      {"value", c.value},
                      {"threshold", c.threshold},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  j["summary"] = {{"total", report.total()}, {"passed", report.passed()},
                  {"failed", report.failed()}};
  j["wall_clock_ms"] = report.wall_clock_ms;
  return j.dump(2);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite: " << report.suite << "\n";
  os << "config: " << report.config_echo << "\n";
  for (const CheckRecord& c : report.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.inputs.empty()) os << " (" << c.inputs << ")";
    os << "  value=" << c.value << " threshold=" << c.threshold << "\n";
  }
  os << report.passed() << "/" << report.total() << " checks passed, "
     << report.wall_clock_ms << " ms\n";
  return os.str();
}

}  // namespace qs3
