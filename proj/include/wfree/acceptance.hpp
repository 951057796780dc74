#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wfree {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

using Progress = std::function<void(const std::string&)>;

// Acceptance criteria 1..11; ids outside that range throw.
CriterionResult run_criterion(int id, const Progress& progress = nullptr);
std::vector<CriterionResult> run_acceptance(const Progress& progress = nullptr);

}  // namespace wfree
