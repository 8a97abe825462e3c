#pragma once

#include <string>
#include <vector>

namespace gasket {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

// The full acceptance suite: every criterion evaluated exactly, one result
// per criterion. Shared by `gasket verify` and the acceptance test binary.
std::vector<CriterionResult> run_acceptance();

// Render one "CRITERION k: PASS/FAIL — ..." line.
std::string criterion_line(const CriterionResult& r);

}  // namespace gasket
