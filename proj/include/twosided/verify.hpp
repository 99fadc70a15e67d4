#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twosided/oracle.hpp"

namespace twosided {

enum class Scale { Tiny, Default };
Scale parse_scale(std::string_view text);

struct CheckResult {
  int id = 0;
  std::string name;
  std::string summary;
  bool passed = false;
  double seconds = 0;
  std::vector<std::string> details;   // what was checked
  std::vector<std::string> failures;  // why the check failed
  std::vector<std::string> findings;  // reported observations that do not fail the check
  std::vector<OracleRecord> records;

  std::string to_json() const;
};

// Names of the acceptance checks in order: golden, pathtests, cycle, path,
// thresholds, nonadaptive, restricted, soundness, sliding.
const std::vector<std::string>& check_names();

// Runs one check by name (or by its number "1".."9").
CheckResult run_check(std::string_view name, Scale scale);
std::vector<CheckResult> run_checks(Scale scale, const std::vector<std::string>& names = {});

}  // namespace twosided
