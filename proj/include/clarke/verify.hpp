#pragma once

#include <string>
#include <vector>

#include "clarke/report.hpp"

namespace clarke {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;  // short human-readable measurement
  Json details;
};

// Runs the acceptance criteria (optionally filtered by id or name
// substring). Every tolerance is pinned here; failures are data, not
// exceptions.
std::vector<CriterionResult> run_acceptance(const std::string& only = "");

// Full verification report, reproducible byte-for-byte.
Json cmd_verify(const std::string& only = "");

}  // namespace clarke
