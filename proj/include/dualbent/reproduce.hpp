#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dualbent/report.hpp"

namespace dualbent {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  json certificate;
  std::string diagnostic;
  double seconds = 0;  // reported on stderr only, never in JSON
};

struct RunReport {
  std::string command;
  json inputs = json::array();  // {path or construction id, sha256}
  std::vector<CheckOutcome> checks;
  std::uint64_t seed = 0;

  bool passed() const;
  // Deterministic given inputs and seed.
  json to_json() const;
};

// Runs one named check, converting library errors into a failed outcome.
CheckOutcome run_check(const std::string& name, const std::function<bool(json&)>& body);

// Reproduces one of example1..example4 or the reduced stand-ins for example5. When
// input_dir is set the function is read from <input_dir>/<scope>.tbl.
RunReport reproduce(const std::string& scope, std::uint64_t seed, const std::optional<std::string>& input_dir = {});

// Scopes run by "all-desk", in report order.
std::vector<std::string> desk_scopes();

}  // namespace dualbent
