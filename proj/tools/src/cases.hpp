#pragma once

#include <string>
#include <vector>

#include "leibcoh/cochain.hpp"
#include "report.hpp"

namespace leibcoh::cli {

struct CaseInfo {
  std::string id;
  std::string summary;
};

// Named reproduction cases with embedded golden values.
std::vector<CaseInfo> case_list();
// Throws std::invalid_argument for an unknown id.
Report run_case(const std::string& id, const Budget& budget);

}  // namespace leibcoh::cli
