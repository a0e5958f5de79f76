// Runs every acceptance criterion and prints one pass/fail line per criterion.

#include <iostream>

#include "tlab/verify.hpp"

int main() {
  tlab::AcceptanceSuite suite;
  bool ok = true;
  for (int id = 1; id <= tlab::AcceptanceSuite::kCount; ++id) {
    const auto result = suite.run(id);
    std::cout << tlab::format_result(result) << std::endl;
    ok = ok && result.passed;
  }
  return ok ? 0 : 1;
}
