#pragma once

#include <string>
#include <vector>

namespace isogenix {

struct SelftestResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Golden fixtures over F_101 and F_1009 plus small randomized cross-checks against Vélu.
std::vector<SelftestResult> run_selftest();

}  // namespace isogenix
