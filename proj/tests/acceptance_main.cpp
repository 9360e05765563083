// Runs every acceptance criterion and prints one verdict line per criterion.

#include <cstdio>
#include <cstdlib>

#include "waves/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<waves::CriterionResult> results;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) results.push_back(waves::run_criterion(std::atoi(argv[i])));
  } else {
    results = waves::run_acceptance();
  }
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s (%.2fs of %.0fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds, r.time_limit);
    if (!r.detail.empty()) std::printf("    %s\n", r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
