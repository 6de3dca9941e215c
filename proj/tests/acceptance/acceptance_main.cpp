// Runs every identity check at full size and prints one line per criterion.

#include <cstdio>
#include <iostream>

#include "interlace/verify.hpp"

int main() {
  const auto results = interlace::run_verification(interlace::VerifyOptions{}, [](const interlace::CriterionResult& r) {
    std::cout << interlace::format_result_line(r, true) << std::endl;
  });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  std::cout << passed << "/" << results.size() << " acceptance criteria passed\n";
  return passed == results.size() ? 0 : 1;
}
