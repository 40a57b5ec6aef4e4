#pragma once

#include <string>
#include <vector>

namespace jlcomb {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

int criterion_count();
/// Runs acceptance criterion `id` (1-based).
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();
/// "[PASS] 3 title (0.12 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace jlcomb
