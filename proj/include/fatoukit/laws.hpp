#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fatoukit/escape.hpp"
#include "fatoukit/family.hpp"
#include "fatoukit/normality.hpp"

namespace fatoukit {

struct LawParams {
  EscapeParams escape;
  NormalityParams normality;
  int band_px = 2;
  // Members taken from each operand to build the pairwise sum and product
  // families; the pair count must stay within pair_budget.
  int pair_members = 16;
  std::size_t pair_budget = 4096;
  bool sum_product = true;
};

/// One law evaluated pixelwise as "lhs REL rhs". `violations` counts pixels
/// contradicting the law; `reverse_difference` counts pixels where the
/// reverse inclusion fails, i.e. evidence that an inclusion is strict.
struct LawCheck {
  std::string law;
  std::string relation;
  long violations = 0;
  long reverse_difference = 0;
  bool skipped = false;
  std::string notice;

  bool holds() const { return !skipped && violations == 0; }
};

struct LawReport {
  std::vector<LawCheck> checks;
  std::vector<std::string> warnings;

  const LawCheck* find(const std::string& law) const;
};

/// Members of a and b combined pairwise (a_i + b_j or a_i * b_j) in
/// diagonal order i + j ascending.
FiniteSet pairwise_family(const FamilySpec& a, const FamilySpec& b, std::size_t m, bool product);

LawReport check_algebra_laws(const FamilySpec& a, const FamilySpec& b, const Window& w, const LawParams& p);

}  // namespace fatoukit
