// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <cstdlib>
#include <iostream>
#include <string>

#include "altmot/acceptance.hpp"

int main(int argc, char **argv)
{
  int max_degree = 14;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--max-degree")
      max_degree = std::atoi(argv[i + 1]);

  int failed = 0;
  altmot::acceptance::run_all(max_degree, [&](const altmot::acceptance::CheckResult &r) {
    std::cout << altmot::acceptance::format(r) << std::endl;
    if (!r.passed)
      ++failed;
  });
  std::cout << (failed == 0 ? "all " : std::to_string(failed) + " of ")
            << altmot::acceptance::kCriterionCount << " criteria " << (failed == 0 ? "passed" : "failed") << "\n";
  return failed == 0 ? 0 : 1;
}
