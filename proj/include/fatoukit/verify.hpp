#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fatoukit {

/// Overrides applied on top of each case's fixed parameters.
struct VerifyConfig {
  std::optional<double> escape_radius;
  std::optional<double> marty_threshold;
  std::optional<int> n_max;
  int threads = 0;
  std::string schema_path;  // empty: the schema shipped with the sources
};

struct CaseResult {
  bool pass = false;
  std::string detail;
};

struct VerifyCase {
  std::string name;
  std::string claim;
  std::function<CaseResult(const VerifyConfig&)> run;
};

/// The built-in example suite, in a fixed order.
const std::vector<VerifyCase>& verify_cases();

std::string default_schema_path();

}  // namespace fatoukit
