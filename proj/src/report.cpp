#include "engel/report.hpp"

#include <sstream>

namespace engel::rpt {

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["claim"] = claim;
  j["inputs"] = inputs;
  j["verdict"] = verdict;
  j["witness"] = witness.is_null() ? nlohmann::json() : witness;
  j["iterations"] = iterations;
  j["millis"] = with_timing ? millis : 0;
  j["config"] = config;
  if (!details.empty()) j["details"] = details;
  return j;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "[" << verdict << "] " << claim;
  if (!inputs.empty()) os << "  inputs=" << inputs.dump();
  if (!witness.is_null()) os << "  witness=" << witness.dump();
  os << "  iterations=" << iterations;
  if (!details.empty()) os << "  details=" << details.dump();
  return os.str();
}

}  // namespace engel::rpt
