#include <cstdlib>
#include <iostream>
#include <string>

#include "qhrigid/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  bool ok = true;
  for (int id = 1; id <= qhr::kCriterionCount; ++id) {
    const auto r = qhr::run_criterion(id, seed);
    std::cout << qhr::format_criterion(r) << "\n";
    if (!r.passed)
      for (const auto& n : r.notes) std::cout << "      " << n << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
