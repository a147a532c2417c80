#pragma once

#include <string>

#include "fatoukit/laws.hpp"
#include "fatoukit/report.hpp"

namespace fatoukit {

struct RunInputs {
  std::string text;
  FamilySpec spec;
  Window window;
  NormalityParams normality;
  EscapeParams escape;
  OrbitLimits orbit;
};

struct Analysis {
  ClassificationMap map;
  bool vacuous = false;
};

/// Normality labels with the escape bits merged in.
Analysis analyze(const RunInputs& in);

/// Spec and parameter echo, counts, escape areas and warnings.
json classify_document(const RunInputs& in, const Analysis& a);

/// classify_document plus connectedness, fixed points, per-component limit
/// functions and exceptional-point candidates.
json report_document(const RunInputs& in, const Analysis& a);

json algebra_document(const RunInputs& first, const std::string& text2, const FamilySpec& spec2,
                      const LawReport& laws);

}  // namespace fatoukit
