#include <cstdio>

#include "pezzo/acceptance/suite.hpp"

int main() {
  auto results = pezzo::acceptance::run_suite();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s\n", r.line().c_str());
    failed += !r.passed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
