#include "serialize.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace splitorder::cli {

using nlohmann::ordered_json;

std::string conditions_to_json(const ConditionSystem& system) {
  ordered_json doc;
  doc["stages"] = system.stages;
  doc["order"] = system.target_order;
  doc["route"] = to_string(system.route);
  doc["conditions"] = ordered_json::array();
  for (const auto& entry : system.entries) {
    doc["conditions"].push_back({{"order", entry.degree},
                                 {"lyndon", entry.lyndon.to_string()},
                                 {"polynomial", entry.polynomial.to_string()},
                                 {"rhs", entry.rhs.to_string()}});
  }
  return doc.dump(2) + "\n";
}

std::string conditions_to_text(const ConditionSystem& system) {
  std::ostringstream out;
  out << "# route=" << to_string(system.route) << " stages=" << system.stages << " order=" << system.target_order
      << " conditions=" << system.entries.size() << "\n";
  for (const auto& entry : system.entries) {
    out << entry.degree << " " << entry.lyndon.to_string() << "  " << entry.polynomial << " = " << entry.rhs << "\n";
  }
  return out.str();
}

std::string report_to_json(const ConvergenceReport& report) {
  ordered_json doc;
  doc["scheme"] = report.scheme_name;
  doc["n"] = report.dimension;
  doc["seed"] = report.seed;
  doc["pairs"] = ordered_json::array();
  for (std::size_t i = 0; i < report.step_sizes.size(); ++i) {
    doc["pairs"].push_back({report.step_sizes[i], report.errors[i]});
  }
  doc["slope"] = report.slope;
  doc["residual"] = report.residual;
  doc["scaling"] = {report.scale_a, report.scale_b};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const ConvergenceReport& report) {
  std::ostringstream out;
  char line[96];
  out << "scheme " << report.scheme_name << "  n=" << report.dimension << "  seed=" << report.seed << "\n";
  for (std::size_t i = 0; i < report.step_sizes.size(); ++i) {
    std::snprintf(line, sizeof line, "t=%-12.6g error=%.6e\n", report.step_sizes[i], report.errors[i]);
    out << line;
  }
  std::snprintf(line, sizeof line, "slope: %.4f  (fit residual %.3e)\n", report.slope, report.residual);
  out << line;
  return out.str();
}

}  // namespace splitorder::cli
