#pragma once

// The acceptance suite shared by the selftest subcommand and the ctest binary.

#include <cstdint>
#include <string>
#include <vector>

namespace qhr {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> notes;  // failures first, then a short summary
};

constexpr int kCriterionCount = 7;

CriterionResult run_criterion(int id, std::uint64_t seed = 0);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0);
/// "PASS  5  sl2-block end-to-end"
std::string format_criterion(const CriterionResult& r);

}  // namespace qhr
