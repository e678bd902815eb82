#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace engel::rpt {

// Structured verdict record; one per check. `claim` is the stable anchor id
// of the statement being checked, `verdict` one of the fixed strings
// {holds, fails, engel, not-engel, undetermined, experimental-pass,
//  experimental-fail, pass, fail}.
struct Report {
  std::string claim;
  nlohmann::json inputs = nlohmann::json::object();
  std::string verdict;
  nlohmann::json witness;  // null unless verdict is fails/not-engel
  std::uint64_t iterations = 0;
  std::int64_t millis = 0;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json(bool with_timing = true) const;
  std::string text() const;
  bool ok() const {
    return verdict == "holds" || verdict == "engel" || verdict == "pass" ||
           verdict == "experimental-pass";
  }
};

}  // namespace engel::rpt
