#pragma once

#include <string>
#include <vector>

namespace cwl::tools {

struct ScenarioResult {
  std::string name;
  bool pass;
  std::string detail;  // empty on success, diagnostic on failure
};

/// Run the full scenario suite reproducing the worked examples the library
/// is built around. Deterministic; every scenario either passes or reports
/// what differed.
std::vector<ScenarioResult> run_paper_examples();

}  // namespace cwl::tools
