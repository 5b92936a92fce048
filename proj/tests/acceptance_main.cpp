#include <cstdlib>
#include <iostream>

#include "bernstein/acceptance.hpp"

// Runs the end-to-end checks and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.
int main() {
  const char* level = std::getenv("BERNSTEIN_ACCEPTANCE_LEVEL");
  const bool full = level != nullptr && std::string(level) == "full";
  int failed = 0;
  for (const bernstein::CriterionResult& r : bernstein::run_acceptance(full)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << ": " << r.name << " (" << r.detail
              << ")\n";
    if (!r.pass) ++failed;
  }
  return failed;
}
