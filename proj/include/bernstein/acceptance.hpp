#pragma once

#include <string>
#include <vector>

namespace bernstein {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

/// End-to-end identity and property checks over the whole library.
/// full = true enlarges windows and doubling studies.
std::vector<CriterionResult> run_acceptance(bool full);

}  // namespace bernstein
