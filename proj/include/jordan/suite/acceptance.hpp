#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jordan/report.hpp"

namespace jordan {

struct Criterion {
  int id = 0;
  std::string title;
  double limit_s = 0;
  std::function<std::vector<Report>()> run;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  double seconds = 0;
  double limit_s = 0;
  std::vector<Report> reports;
  std::string error;  // set when the run threw

  bool within_limit() const { return seconds <= limit_s; }
  bool all_verified() const;
  bool pass() const { return error.empty() && all_verified() && within_limit(); }
  std::string summary() const;  // one line
};

// The ten acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

CriterionResult run_criterion(const Criterion& c);

}  // namespace jordan
