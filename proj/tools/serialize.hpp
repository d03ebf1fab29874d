#pragma once

#include <string>

#include "splitorder/conditions.hpp"
#include "splitorder/numeric.hpp"

namespace splitorder::cli {

// {"stages", "order", "route", "conditions": [{"order", "lyndon", "polynomial", "rhs"}]}
std::string conditions_to_json(const ConditionSystem& system);
// One line per entry: "<q> <word>  <polynomial> = <rhs>".
std::string conditions_to_text(const ConditionSystem& system);

// {"scheme", "n", "seed", "pairs": [[t, error], ...], "slope", "residual", "scaling": [sA, sB]}
std::string report_to_json(const ConvergenceReport& report);
std::string report_to_text(const ConvergenceReport& report);

}  // namespace splitorder::cli
