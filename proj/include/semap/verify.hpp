#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace semap {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Named end-to-end checks, in order:
// enumeration, counts, catalog, square-types, operators, surgery, identify,
// transitivity, uniqueness, geometry.
const std::vector<std::string>& suite_names();

// Throws UnknownName. Failures are reported in the result, never thrown.
SuiteResult run_suite(std::string_view name);

}  // namespace semap
