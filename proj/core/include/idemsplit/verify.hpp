#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace idemsplit {

enum class Profile { kSmall, kStandard };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // one-line summary of what was exercised
};

// Runs the full verification suite at the given scale. Every check is
// deterministic in (profile, seed). The small profile uses the minimum
// trial counts the checks are specified at; standard scales them up.
std::vector<CheckResult> run_verification(Profile profile, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace idemsplit
