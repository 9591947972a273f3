// Structured verification reports: one record per check, deterministic
// ordering, JSON and plain-text renderings.
#pragma once

#include <string>
#include <vector>

namespace qs3 {

struct CheckRecord {
  std::string name;
  std::string inputs;
  double value = 0.0;      // measured value (0/1 for boolean checks)
  double threshold = 0.0;  // pass criterion: value <= threshold for numeric checks
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::string config_echo;
  std::vector<CheckRecord> checks;
  double wall_clock_ms = 0.0;

  int total() const { return static_cast<int>(checks.size()); }
  int passed() const;
  int failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void add_numeric(const std::string& name, const std::string& inputs, double value,
                   double threshold);
  void add_bool(const std::string& name, const std::string& inputs, bool ok);
  void sort_records();
};

// JSON rendering with a versioned schema; the wall-clock field is the only
// run-dependent part for a fixed seed and config.
std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace qs3
