// Suite runner: drives the verification checks over parameter grids and
// assembles a deterministic report.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qs3/operators.hpp"
#include "qs3/report.hpp"

namespace qs3 {

enum class Suite { Relations, Basis, Identities, Iso, Fiber, LemmaGen, KTheory, All };

Suite suite_from_string(const std::string& s);
std::string suite_to_string(Suite s);

struct SuiteConfig {
  Suite suite = Suite::All;
  std::vector<double> p_grid{0.0, 0.3, 0.7};
  std::vector<double> q_grid{0.0, 0.3, 0.7};
  std::vector<double> theta_grid{0.0, 0.5, 0.7071};
  Cutoff cutoff{24, 24};
  int K = 0;  // series truncation; <= 0 derives it from p, q per grid point
  double tol = -1.0;  // negative: per-check defaults
  std::uint64_t seed = 12345;
  std::string preset;  // six-term preset name or JSON file path (ktheory suite)

  std::string echo() const;
};

VerificationReport run(const SuiteConfig& config);

}  // namespace qs3
